#pragma once

#include "conesphere/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace conesphere {

// An exact real of the form q + sum_i c_i * g_i, where q and the c_i are
// rationals and the g_i are user-declared generators assumed linearly
// independent over Q together with 1. Only Q-linear relations between such
// values are decidable, which is all the classification theorems consume.
class ExactReal {
 public:
  using Term = std::pair<std::string, Rational>;

  ExactReal() = default;
  ExactReal(Rational r) : rational_(std::move(r)) {}
  ExactReal(int n) : rational_(n) {}
  ExactReal(const Integer& n) : rational_(n) {}

  static ExactReal generator(const std::string& id, Rational coeff = Rational(1));

  const Rational& rational_part() const { return rational_; }
  const std::vector<Term>& generator_part() const { return terms_; }
  bool is_rational() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && rational_ == 0; }

  ExactReal& operator+=(const ExactReal& other);
  ExactReal& operator-=(const ExactReal& other);
  ExactReal& operator*=(const Rational& s);

  friend ExactReal operator+(ExactReal a, const ExactReal& b) { return a += b; }
  friend ExactReal operator-(ExactReal a, const ExactReal& b) { return a -= b; }
  friend ExactReal operator*(ExactReal a, const Rational& s) { return a *= s; }
  friend ExactReal operator*(const Rational& s, ExactReal a) { return a *= s; }
  ExactReal operator-() const;

  friend bool operator==(const ExactReal& a, const ExactReal& b) {
    return a.rational_ == b.rational_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExactReal& a, const ExactReal& b) { return !(a == b); }

  // Total order for use as a container key; coincides with numeric order on
  // rational values but is lexicographic across generator terms.
  friend bool operator<(const ExactReal& a, const ExactReal& b);

  // If this value is q * other for a rational q, returns q.
  std::optional<Rational> ratio_to(const ExactReal& other) const;

  std::string str() const;

 private:
  void prune();

  Rational rational_ = 0;
  std::vector<Term> terms_;  // sorted by generator id, no zero coefficients
};

}  // namespace conesphere
