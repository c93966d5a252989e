#include "conesphere/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace conesphere {

Rational parse_rational(const std::string& raw_text) {
  std::string text = raw_text;
  if (!text.empty() && text.front() == '+') text.erase(text.begin());
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/' && ch != '-' && ch != '+')
      throw std::invalid_argument("malformed rational literal: " + text);
  }
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, text.c_str(), 10) != 0) {
    mpq_clear(raw);
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  if (mpz_sgn(mpq_denref(raw)) == 0) {
    mpq_clear(raw);
    throw std::invalid_argument("zero denominator: " + text);
  }
  Rational q(raw);
  mpq_clear(raw);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  return q.get_str();
}

bool is_integer(const Rational& q) {
  return q.get_den() == 1;
}

bool is_half_integer(const Rational& q) {
  return q.get_den() == 2;
}

Integer squarefree_part(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("squarefree_part needs a positive input");
  Integer rest = n;
  Integer sf = 1;
  // strip factors of 2 first, then odd trial division
  for (Integer d = 2; d * d <= rest;) {
    if (rest % d == 0) {
      int mult = 0;
      while (rest % d == 0) {
        rest /= d;
        ++mult;
      }
      if (mult % 2 == 1) sf *= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  sf *= rest;  // leftover prime (or 1)
  return sf;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  auto num = exact_sqrt(Integer(q.get_num()));
  auto den = exact_sqrt(Integer(q.get_den()));
  if (!num || !den) return std::nullopt;
  Rational root(*num, *den);
  root.canonicalize();
  return root;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer m;
  mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return m;
}

}  // namespace conesphere
