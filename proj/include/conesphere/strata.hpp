#pragma once

#include "conesphere/angles.hpp"

#include <string>
#include <vector>

namespace conesphere {

// Stratum Q(d_1,...,d_s, -2^p) of quadratic differentials with at worst
// double poles. `orders` holds the d_i (>= -1, never -2; order 0 marks a
// regular point); the double poles are counted separately by `double_poles`.
struct QuadraticStratum {
  int genus = 0;
  std::vector<int> orders;  // sorted descending on construction
  int double_poles = 0;     // p

  // Throws std::invalid_argument unless sum(orders) - 2p = 4g - 4, every
  // order is >= -1 and != -2, and the number of odd orders is even.
  static QuadraticStratum make(int genus, std::vector<int> orders, int double_poles);

  std::string str() const;
};

struct QuadResidueConfig {
  std::vector<Rational> residues;  // quadratic residues, all > 0
};

// Stratum H(a_1,...,a_n, -1^p) of meromorphic 1-forms.
struct AbelianStratum {
  int genus = 0;
  std::vector<int> zero_orders;  // all > 0, sorted descending on construction
  int simple_poles = 0;          // p >= 1

  // Throws unless sum(zero_orders) - p = 2g - 2, p >= 1 and orders positive.
  static AbelianStratum make(int genus, std::vector<int> zero_orders, int simple_poles);

  std::string str() const;
};

struct AbelianResidueConfig {
  std::vector<ExactReal> residues;  // nonzero, signed
};

enum class StrataClause {
  GenericYes,
  ExceptionQ4s,         // Q(4s, -2^{2s}), equal residues, genus 1
  ExceptionQOddPair,    // Q(2s+1, 2s-1, -2^{2s}), equal residues, genus 1
  ExceptionABC,         // (A^2, B^2, C^2, ..., C^2) with an additive relation
  ExceptionAABB,        // (A^2, A^2, B^2, ..., B^2) in Q(p-1, p-3, -2^p)
  ExceptionEvenWeight,  // L*f^2 form, sum f even and < 2p
  ExceptionOddWeight,   // L*f^2 form, sum f odd and <= max odd order
  ExceptionGenus0Arith,  // Abelian genus 0: sum f <= max zero order
  ResidueTheoremViolation,
};

const char* strata_clause_id(StrataClause c);

struct StrataVerdict {
  bool realizable = false;
  StrataClause clause = StrataClause::GenericYes;
  std::string detail;
};

// Thm realizability of a residue configuration in a stratum of primitive
// quadratic differentials. Requires |config| == p >= 1; for genus 0 the
// stratum must contain an odd order (primitivity), else throws.
StrataVerdict quad_residues_realizable(const QuadraticStratum& stratum,
                                       const QuadResidueConfig& config);

// Same predicate with the configuration given by the square roots of the
// residues (cylinder circumferences), which stay inside the exact symbolic
// representation. Agrees with quad_residues_realizable on rational input.
StrataVerdict quad_circumferences_realizable(const QuadraticStratum& stratum,
                                             const std::vector<ExactReal>& circumferences);

// Realizability of a signed residue configuration for meromorphic 1-forms.
// Requires |config| == p.
StrataVerdict abelian_residues_realizable(const AbelianStratum& stratum,
                                          const AbelianResidueConfig& config);

}  // namespace conesphere
