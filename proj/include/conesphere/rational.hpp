#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace conesphere {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p/q" etc. Throws std::invalid_argument on malformed input
// or zero denominator.
Rational parse_rational(const std::string& text);

// "p/q" with q > 0 omitted when q == 1.
std::string rational_str(const Rational& q);

bool is_integer(const Rational& q);

// q in Z + 1/2 (and not in Z).
bool is_half_integer(const Rational& q);

// Largest s such that n = s * m^2 with s squarefree. n must be positive.
Integer squarefree_part(const Integer& n);

std::optional<Integer> exact_sqrt(const Integer& n);
std::optional<Rational> exact_sqrt(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace conesphere
