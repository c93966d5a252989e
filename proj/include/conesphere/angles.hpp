#pragma once

#include "conesphere/exact.hpp"

#include <map>
#include <optional>
#include <vector>

namespace conesphere {

// A cone angle measured in turn units (theta / 2pi). The value is a rational
// plus a rational combination of declared incommensurable generators.
class Angle {
 public:
  explicit Angle(ExactReal value);
  explicit Angle(Rational turn) : Angle(ExactReal(std::move(turn))) {}

  const ExactReal& value() const { return value_; }
  const Rational& turn() const { return value_.rational_part(); }
  bool has_generator_part() const { return !value_.is_rational(); }

  // Cone angle exactly 2pi: accepted, flagged as a regular point in reports.
  bool is_regular() const { return value_ == ExactReal(1); }

  friend bool operator==(const Angle& a, const Angle& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Angle& a, const Angle& b) { return !(a == b); }
  friend bool operator<(const Angle& a, const Angle& b) { return a.value_ < b.value_; }

  std::string str() const { return value_.str(); }

 private:
  ExactReal value_;
};

struct AngleDistribution {
  int genus = 0;
  std::vector<Angle> angles;

  int size() const { return static_cast<int>(angles.size()); }
};

enum class Parity { Even, Odd, NonInteger };

// Even: angle in 2pi*Z (turn integer). Odd: angle in pi(2Z+1) (turn in Z+1/2).
// NonInteger: everything else; any generator part makes the angle non-integer.
Parity parity_of(const Angle& a);

struct Partition {
  std::vector<Integer> evens;      // integer coefficients a_i
  std::vector<Rational> odds;      // half-integer coefficients b_j, sorted descending
  std::vector<Angle> nonintegers;  // c_k
  ExactReal sigma;                 // total sum
  Integer maximal_integral_sum;    // T

  int n_even() const { return static_cast<int>(evens.size()); }
  int n_odd() const { return static_cast<int>(odds.size()); }
  int n_nonint() const { return static_cast<int>(nonintegers.size()); }
  int n() const { return n_even() + n_odd() + n_nonint(); }
};

Partition partition(const AngleDistribution& dist);

// T >= 2g + n - 1 when n_odd is even and n_nonint = 0, else T >= 2g + n - 2.
bool strengthened_gb(const Partition& part, int genus);

// input[i] = scale * weights[i] with positive integer weights of gcd 1.
struct RayDecomposition {
  Rational scale;
  std::vector<Integer> weights;
};

// Rational-only ray: none if the list is empty, any entry has a generator
// part, or the entries are not all positive.
std::optional<RayDecomposition> ray_decomposition(const std::vector<ExactReal>& values);

// Generalized ray over the symbolic representation: values[i] = scale * w[i]
// with positive integer weights of gcd 1 and a common (possibly symbolic)
// positive direction. Coincides with ray_decomposition on rational input.
struct CommonRay {
  ExactReal scale;
  std::vector<Integer> weights;
};

std::optional<CommonRay> common_ray(const std::vector<ExactReal>& values);

struct SignedSumWitness {
  std::vector<int> signs;  // entries +1 / -1, one per input angle
  Integer value;           // the nonnegative integer K the signs achieve
};

// All K in Z>=0 of the form sum_j eps_j c_j with the generator parts
// cancelling exactly. Empty input yields {0} by the empty-sum convention.
std::map<Integer, SignedSumWitness> integer_signed_sums(const std::vector<Angle>& c);

}  // namespace conesphere
