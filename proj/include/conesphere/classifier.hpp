#pragma once

#include "conesphere/assignment.hpp"
#include "conesphere/enumerate.hpp"
#include "conesphere/strata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conesphere {

enum class DecisionPath { Literal, StrataReduction, Merged };

const char* decision_path_str(DecisionPath p);

struct Certificate {
  std::string id;      // clause identifier, e.g. "prop5.1-family3", "thm6.10"
  std::string detail;  // matched parameters, human readable

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class PlainGaussBonnet { Holds, Fails, Undecidable };

struct Verdict {
  bool realizable = false;
  std::vector<Certificate> certificates;  // deciding clause first
  DecisionPath path = DecisionPath::Literal;
  PlainGaussBonnet plain_gb = PlainGaussBonnet::Holds;
  std::vector<std::string> notes;
  std::optional<JenkinsStrebelSurface> witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct ClassifyOptions {
  bool attach_witness = false;
  SearchBounds witness_bounds{};
};

// Literal reading of the classification theorems, including the stated
// arithmetic bounds of the genus-zero strict case. Kept as an independent
// implementation for cross-checking.
Verdict classify_literal(const AngleDistribution& dist, Monodromy cls);

// Reduction to residue realizability in strata of quadratic/Abelian
// differentials over all admissible equator/pole assignments.
Verdict classify_via_strata(const AngleDistribution& dist, Monodromy cls,
                            const ClassifyOptions& opts = {});

// The decision surface: literal theorems, with the genus-zero strict
// arithmetic condition delegated to the strata reduction (which follows the
// proofs where the stated bound is ambiguous). Divergences between the two
// readings are recorded in the notes.
Verdict classify(const AngleDistribution& dist, Monodromy cls, const ClassifyOptions& opts = {});

struct ComparisonReport {
  Verdict coaxial;
  Verdict strict;
  Verdict any;
  std::vector<std::string> violations;  // comparison-law failures (implementation bugs)
};

ComparisonReport compare_classes(const AngleDistribution& dist, const ClassifyOptions& opts = {});

struct CrosscheckParams {
  std::vector<Rational> coefficients;
  int max_n = 5;
  int max_genus = 2;
};

struct CrosscheckRow {
  AngleDistribution dist;
  Monodromy cls = Monodromy::StrictDihedral;
  Verdict literal;
  Verdict reduction;
  bool documented = false;  // inside the Thm 6.5/6.10 literal-bound ambiguity
};

struct CrosscheckReport {
  long long cases = 0;
  std::vector<CrosscheckRow> divergences;
  std::vector<std::string> violations;  // undocumented divergences, law failures
};

CrosscheckReport run_crosscheck(const CrosscheckParams& params);

}  // namespace conesphere
