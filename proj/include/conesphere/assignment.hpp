#pragma once

#include "conesphere/angles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conesphere {

enum class Monodromy { Coaxial, StrictDihedral, DihedralAny };

const char* monodromy_str(Monodromy m);

struct GuardReason {
  std::string id;    // "trivial-monodromy", "lemma6.2", "egt-coaxial"
  std::string text;
};

// Scope and small-group guards that apply before any stratum machinery.
// Returns the rejection reason when the (genus, class, distribution) triple
// is settled without touching strata:
//  - genus 0, all angles in 2pi*Z: trivial monodromy, delegated to the
//    branched-cover classification (out of scope here);
//  - genus 0 strict with fewer than two odd singularities;
//  - genus 0 strict with n_odd = 2 and no non-integer singularity: such a
//    metric always has co-axial monodromy.
std::optional<GuardReason> monodromy_guard(const Partition& part, int genus, Monodromy cls);

// One way of spreading the singularities of a distribution between the
// equator and the poles of a hemispherical surface. The equatorial
// singularities become zeros/simple poles of the quadratic differential of
// orders d_i = 2*coefficient - 2; everything else sits at a double pole whose
// circumference (square root of the quadratic residue) it prescribes; the
// count of double poles t is forced by sum(d) = 4g - 4 + 2t.
struct StratumAssignment {
  std::vector<int> equatorial;              // indices into dist.angles
  std::vector<int> orders;                  // d_i, descending
  std::vector<ExactReal> circumferences;    // pole-side coefficients + unit entries
  int double_poles = 0;                     // t
  int unit_poles = 0;                       // t - #pole-side singularities

  std::string str() const;  // e.g. "Q(1,1,-2^3) circumferences (3/4,3/4,3/2)"
};

// Abelian counterpart for the co-axial reduction: chosen integer
// singularities turn into zeros of order a_i - 1, the rest become simple
// poles carrying |residue| = coefficient, padded with unit poles.
struct CoaxialAssignment {
  std::vector<int> equatorial;            // indices of integer angles used as zeros
  std::vector<int> zero_orders;           // a_i - 1 with zero entries dropped
  std::vector<ExactReal> pole_magnitudes; // remaining coefficients + unit entries
  int simple_poles = 0;                   // t
  int unit_poles = 0;

  std::string str() const;
};

// Classifier policy follows the proofs: sum(d) strictly above the bound when
// n_odd is even and n_nonint = 0, and (genus 0) at least one odd equatorial
// order so the stratum is primitive. Oracle policy keeps every combinatorially
// meaningful assignment so the witness search stays complete within bounds.
enum class AssignmentPolicy { Classifier, Oracle };

std::vector<StratumAssignment> enumerate_quadratic_assignments(const AngleDistribution& dist,
                                                               AssignmentPolicy policy);

// For the classifier the proofs allow reducing every integer singularity to a
// zero, so only the full equatorial choice is emitted; the oracle enumerates
// all subsets.
std::vector<CoaxialAssignment> enumerate_coaxial_assignments(const AngleDistribution& dist,
                                                             AssignmentPolicy policy);

}  // namespace conesphere
