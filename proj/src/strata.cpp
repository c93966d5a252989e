#include "conesphere/strata.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace conesphere {

namespace {

std::string orders_str(const std::vector<int>& orders, int poles, const char* pole_order) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < orders.size(); ++i) {
    if (i) out << ",";
    out << orders[i];
  }
  if (poles > 0) {
    if (!orders.empty()) out << ",";
    out << pole_order << "^" << poles;
  }
  out << ")";
  return out.str();
}

}  // namespace

QuadraticStratum QuadraticStratum::make(int genus, std::vector<int> orders, int double_poles) {
  if (genus < 0 || double_poles < 0) throw std::invalid_argument("invalid quadratic stratum");
  long long sum = 0;
  int odd = 0;
  for (int d : orders) {
    if (d < -1 || d == -2) throw std::invalid_argument("quadratic order must be >= -1 and != -2");
    sum += d;
    if ((d % 2 + 2) % 2 == 1) ++odd;
  }
  if (sum - 2LL * double_poles != 4LL * genus - 4)
    throw std::invalid_argument("quadratic stratum violates sum(d) - 2p = 4g - 4");
  if (odd % 2 != 0)
    throw std::invalid_argument("quadratic stratum needs an even number of odd orders");
  std::sort(orders.begin(), orders.end(), std::greater<>());
  return QuadraticStratum{genus, std::move(orders), double_poles};
}

std::string QuadraticStratum::str() const {
  return "Q" + orders_str(orders, double_poles, "-2");
}

AbelianStratum AbelianStratum::make(int genus, std::vector<int> zero_orders, int simple_poles) {
  if (genus < 0 || simple_poles < 1) throw std::invalid_argument("invalid abelian stratum");
  long long sum = 0;
  for (int a : zero_orders) {
    if (a <= 0) throw std::invalid_argument("abelian zero order must be positive");
    sum += a;
  }
  if (sum - simple_poles != 2LL * genus - 2)
    throw std::invalid_argument("abelian stratum violates sum(a) - p = 2g - 2");
  std::sort(zero_orders.begin(), zero_orders.end(), std::greater<>());
  return AbelianStratum{genus, std::move(zero_orders), simple_poles};
}

std::string AbelianStratum::str() const {
  return "H" + orders_str(zero_orders, simple_poles, "-1");
}

const char* strata_clause_id(StrataClause c) {
  switch (c) {
    case StrataClause::GenericYes: return "generic-yes";
    case StrataClause::ExceptionQ4s: return "exception-Q(4s,-2^2s)";
    case StrataClause::ExceptionQOddPair: return "exception-Q(2s+1,2s-1,-2^2s)";
    case StrataClause::ExceptionABC: return "exception-ABC";
    case StrataClause::ExceptionAABB: return "exception-AABB";
    case StrataClause::ExceptionEvenWeight: return "exception-even-weight";
    case StrataClause::ExceptionOddWeight: return "exception-odd-weight";
    case StrataClause::ExceptionGenus0Arith: return "exception-genus0-arith";
    case StrataClause::ResidueTheoremViolation: return "residue-theorem-violation";
  }
  return "?";
}

namespace {

// Marked regular points (order 0) never constrain residue realizability.
std::vector<int> effective_orders(const QuadraticStratum& stratum) {
  std::vector<int> out;
  for (int d : stratum.orders)
    if (d != 0) out.push_back(d);
  return out;
}

template <typename T>
bool all_equal(const std::vector<T>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

// Does sqrt(rc) = sqrt(ra) + sqrt(rb) hold for positive rationals?
bool sqrt_sum_eq(const Rational& ra, const Rational& rb, const Rational& rc) {
  Rational t = rc - ra - rb;
  return t >= 0 && t * t == 4 * ra * rb;
}

std::string weight_detail(const std::string& scale, const std::vector<Integer>& f) {
  std::ostringstream out;
  Integer sum = 0;
  out << "L=" << scale << ", f=(";
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out << ",";
    out << f[i].get_str();
    sum += f[i];
  }
  out << "), sum=" << sum.get_str();
  return out.str();
}

struct OddOrderPair {
  int b1;  // largest odd order
  int b2;
};

std::optional<OddOrderPair> exactly_two_odd(const std::vector<int>& orders) {
  std::vector<int> odd;
  for (int d : orders)
    if ((d % 2 + 2) % 2 == 1) odd.push_back(d);
  if (odd.size() != 2) return std::nullopt;
  return OddOrderPair{std::max(odd[0], odd[1]), std::min(odd[0], odd[1])};
}

// Bullets (iii)/(iv) of the genus-zero theorem, given the integer weights f of
// the L*f^2 decomposition of the residues. Both bounds depend only on the two
// odd orders b1, b2: the even-weight bound is b1 + b2 + 4, which equals 2p
// exactly when the stratum has no even zeros (adding an even zero leaves the
// bound unchanged).
std::optional<StrataVerdict> weight_obstruction(const OddOrderPair& odd,
                                                const std::vector<Integer>& f,
                                                const std::string& scale) {
  Integer sum = std::accumulate(f.begin(), f.end(), Integer(0));
  if (sum % 2 == 0) {
    int bound = odd.b1 + odd.b2 + 4;
    if (sum < bound)
      return StrataVerdict{false, StrataClause::ExceptionEvenWeight,
                           weight_detail(scale, f) + " < b1+b2+4=" + std::to_string(bound)};
  } else {
    if (sum <= odd.b1)
      return StrataVerdict{false, StrataClause::ExceptionOddWeight,
                           weight_detail(scale, f) + " <= max(b1,b2)=" + std::to_string(odd.b1)};
  }
  return std::nullopt;
}

// Pattern (A^2, B^2, C^2, ..., C^2): positions i, j play A, B; the rest all
// carry one common value. Tests the three additive relations symmetrically.
template <typename Value, typename RelEq>
std::optional<std::string> match_abc(const std::vector<Value>& vals, RelEq rel,
                                     const std::function<std::string(const Value&)>& show) {
  const size_t p = vals.size();
  if (p < 3) return std::nullopt;
  for (size_t i = 0; i < p; ++i) {
    for (size_t j = i + 1; j < p; ++j) {
      const Value* c = nullptr;
      bool rest_equal = true;
      for (size_t k = 0; k < p && rest_equal; ++k) {
        if (k == i || k == j) continue;
        if (!c)
          c = &vals[k];
        else if (!(*c == vals[k]))
          rest_equal = false;
      }
      if (!rest_equal || !c) continue;
      const Value& a = vals[i];
      const Value& b = vals[j];
      const char* matched = nullptr;
      if (rel(a, b, *c))
        matched = "C=A+B";
      else if (rel(a, *c, b))
        matched = "B=A+C";
      else if (rel(b, *c, a))
        matched = "A=B+C";
      if (matched)
        return "(A,B,C)=(" + show(a) + "," + show(b) + "," + show(*c) + "), " + matched;
    }
  }
  return std::nullopt;
}

// Pattern (A^2, A^2, B^2, ..., B^2): some equal pair, rest with one value.
template <typename Value>
std::optional<std::string> match_aabb(const std::vector<Value>& vals,
                                      const std::function<std::string(const Value&)>& show) {
  const size_t p = vals.size();
  if (p < 2) return std::nullopt;
  for (size_t i = 0; i < p; ++i) {
    for (size_t j = i + 1; j < p; ++j) {
      if (!(vals[i] == vals[j])) continue;
      const Value* b = nullptr;
      bool rest_equal = true;
      for (size_t k = 0; k < p && rest_equal; ++k) {
        if (k == i || k == j) continue;
        if (!b)
          b = &vals[k];
        else if (!(*b == vals[k]))
          rest_equal = false;
      }
      if (!rest_equal) continue;
      return "A=" + show(vals[i]) + (b ? ", B=" + show(*b) : std::string());
    }
  }
  return std::nullopt;
}

bool is_stratum_shape(const std::vector<int>& orders, int d1, int d2) {
  return orders.size() == 2 &&
         ((orders[0] == d1 && orders[1] == d2) || (orders[0] == d2 && orders[1] == d1));
}

template <typename Value>
void check_preconditions(const QuadraticStratum& stratum, const std::vector<Value>& config) {
  if (stratum.double_poles < 1) throw std::invalid_argument("predicate needs p >= 1");
  if (static_cast<int>(config.size()) != stratum.double_poles)
    throw std::invalid_argument("residue configuration arity does not match p");
  if (stratum.genus == 0) {
    bool has_odd = false;
    for (int d : stratum.orders)
      if ((d % 2 + 2) % 2 == 1) has_odd = true;
    if (!has_odd)
      throw std::invalid_argument(
          "genus-0 stratum with all orders even is not primitive: " + stratum.str());
  }
}

std::optional<StrataVerdict> genus1_exceptions(const std::vector<int>& eff,
                                               bool residues_all_equal) {
  // stratum validity already pins p = sum(eff)/2 in genus one
  if (!residues_all_equal) return std::nullopt;
  if (eff.size() == 1 && eff[0] >= 4 && eff[0] % 4 == 0)
    return StrataVerdict{false, StrataClause::ExceptionQ4s,
                         "s=" + std::to_string(eff[0] / 4) + ", equal residues"};
  if (eff.size() == 2 && eff[0] % 2 != 0 && eff[1] >= 1 && eff[0] == eff[1] + 2)
    return StrataVerdict{false, StrataClause::ExceptionQOddPair,
                         "s=" + std::to_string((eff[0] - 1) / 2) + ", equal residues"};
  return std::nullopt;
}

}  // namespace

StrataVerdict quad_residues_realizable(const QuadraticStratum& stratum,
                                       const QuadResidueConfig& config) {
  check_preconditions(stratum, config.residues);
  for (const Rational& r : config.residues)
    if (r <= 0) throw std::invalid_argument("quadratic residues must be positive");

  const std::vector<int> eff = effective_orders(stratum);
  const int p = stratum.double_poles;
  const auto& res = config.residues;

  if (stratum.genus >= 2) return {true, StrataClause::GenericYes, ""};
  if (stratum.genus == 1) {
    if (auto v = genus1_exceptions(eff, all_equal(res))) return *v;
    return {true, StrataClause::GenericYes, ""};
  }

  // genus 0
  if (auto odd = exactly_two_odd(eff)) {
    std::vector<ExactReal> as_exact(res.begin(), res.end());
    if (auto ray = ray_decomposition(as_exact)) {
      // residues L'*w_i are of the form L*f_i^2 iff all w_i share one
      // squarefree part
      Integer sf = squarefree_part(ray->weights[0]);
      bool square_form = true;
      std::vector<Integer> f;
      for (const Integer& w : ray->weights) {
        if (squarefree_part(w) != sf) {
          square_form = false;
          break;
        }
        f.push_back(*exact_sqrt(Integer(w / sf)));
      }
      if (square_form) {
        Rational scale = ray->scale * Rational(sf);
        if (auto v = weight_obstruction(*odd, f, rational_str(scale))) return *v;
      }
    }
  }

  std::function<std::string(const Rational&)> show = [](const Rational& r) {
    if (auto root = exact_sqrt(r)) return rational_str(*root);
    return "sqrt(" + rational_str(r) + ")";
  };
  auto sqrt_rel = [](const Rational& a, const Rational& b, const Rational& c) {
    return sqrt_sum_eq(a, b, c);
  };
  if (p >= 3 && p % 2 == 1 && is_stratum_shape(eff, p - 2, p - 2)) {
    if (auto m = match_abc<Rational>(res, sqrt_rel, show))
      return {false, StrataClause::ExceptionABC, *m};
  }
  if (p >= 2 && p % 2 == 0 && is_stratum_shape(eff, p - 1, p - 3)) {
    if (auto m = match_aabb<Rational>(res, show))
      return {false, StrataClause::ExceptionAABB, *m};
  }
  return {true, StrataClause::GenericYes, ""};
}

StrataVerdict quad_circumferences_realizable(const QuadraticStratum& stratum,
                                             const std::vector<ExactReal>& circumferences) {
  check_preconditions(stratum, circumferences);

  const std::vector<int> eff = effective_orders(stratum);
  const int p = stratum.double_poles;

  if (stratum.genus >= 2) return {true, StrataClause::GenericYes, ""};
  if (stratum.genus == 1) {
    if (auto v = genus1_exceptions(eff, all_equal(circumferences))) return *v;
    return {true, StrataClause::GenericYes, ""};
  }

  // genus 0; residues are the squares, so L*f^2 form means the circumference
  // vector itself lies on a common ray
  if (auto odd = exactly_two_odd(eff)) {
    if (auto ray = common_ray(circumferences)) {
      if (auto v = weight_obstruction(*odd, ray->weights, ray->scale.str() + "^2")) return *v;
    }
  }

  std::function<std::string(const ExactReal&)> show = [](const ExactReal& v) { return v.str(); };
  auto sum_rel = [](const ExactReal& a, const ExactReal& b, const ExactReal& c) {
    return a + b == c;
  };
  if (p >= 3 && p % 2 == 1 && is_stratum_shape(eff, p - 2, p - 2)) {
    if (auto m = match_abc<ExactReal>(circumferences, sum_rel, show))
      return {false, StrataClause::ExceptionABC, *m};
  }
  if (p >= 2 && p % 2 == 0 && is_stratum_shape(eff, p - 1, p - 3)) {
    if (auto m = match_aabb<ExactReal>(circumferences, show))
      return {false, StrataClause::ExceptionAABB, *m};
  }
  return {true, StrataClause::GenericYes, ""};
}

StrataVerdict abelian_residues_realizable(const AbelianStratum& stratum,
                                          const AbelianResidueConfig& config) {
  if (static_cast<int>(config.residues.size()) != stratum.simple_poles)
    throw std::invalid_argument("residue configuration arity does not match p");
  ExactReal sum;
  for (const ExactReal& r : config.residues) {
    if (r.is_zero()) throw std::invalid_argument("abelian residues must be nonzero");
    sum += r;
  }
  if (!sum.is_zero())
    return {false, StrataClause::ResidueTheoremViolation, "sum=" + sum.str()};
  if (stratum.genus >= 1) return {true, StrataClause::GenericYes, ""};

  // genus 0: the arithmetic obstruction bites exactly when the residues are
  // commensurable. Relative signs come out of the signed weights, so the
  // symbolic entries need no sign decision of their own.
  const ExactReal& dir = config.residues.front();
  std::vector<Rational> ratios;
  for (const ExactReal& r : config.residues) {
    auto q = r.ratio_to(dir);
    if (!q || *q == 0) return {true, StrataClause::GenericYes, ""};
    ratios.push_back(*q);
  }
  Integer den_lcm = 1;
  for (const Rational& q : ratios) den_lcm = lcm(den_lcm, Integer(q.get_den()));
  Integer g = 0;
  std::vector<Integer> w;
  for (const Rational& q : ratios) {
    w.push_back(Integer(q.get_num()) * (den_lcm / Integer(q.get_den())));
    g = gcd(g, w.back());
  }
  Integer pos = 0;
  for (Integer& x : w) {
    x /= g;
    if (x > 0) pos += x;
  }
  Integer max_order = 0;
  if (!stratum.zero_orders.empty()) max_order = stratum.zero_orders.front();
  if (pos > max_order) return {true, StrataClause::GenericYes, ""};
  std::ostringstream detail;
  detail << "sum f=" << pos.get_str() << " <= max zero order " << max_order.get_str();
  return {false, StrataClause::ExceptionGenus0Arith, detail.str()};
}

}  // namespace conesphere
