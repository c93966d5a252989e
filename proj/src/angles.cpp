#include "conesphere/angles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace conesphere {

Angle::Angle(ExactReal value) : value_(std::move(value)) {
  if (value_.is_rational() && value_.rational_part() <= 0)
    throw std::invalid_argument("cone angle must be positive: " + value_.str());
}

Parity parity_of(const Angle& a) {
  if (a.has_generator_part()) return Parity::NonInteger;
  const Rational& t = a.turn();
  if (is_integer(t)) return Parity::Even;
  if (is_half_integer(t)) return Parity::Odd;
  return Parity::NonInteger;
}

Partition partition(const AngleDistribution& dist) {
  Partition part;
  for (const Angle& a : dist.angles) {
    part.sigma += a.value();
    switch (parity_of(a)) {
      case Parity::Even:
        part.evens.push_back(Integer(a.turn().get_num()));
        break;
      case Parity::Odd:
        part.odds.push_back(a.turn());
        break;
      case Parity::NonInteger:
        part.nonintegers.push_back(a);
        break;
    }
  }
  std::sort(part.odds.begin(), part.odds.end(), std::greater<>());
  std::sort(part.evens.begin(), part.evens.end(), std::greater<>());
  std::sort(part.nonintegers.begin(), part.nonintegers.end(),
            [](const Angle& a, const Angle& b) { return b < a; });

  Integer t = 0;
  for (const Integer& a : part.evens) t += a;
  int take = 2 * (part.n_odd() / 2);
  Rational odd_sum = 0;
  for (int i = 0; i < take; ++i) odd_sum += part.odds[i];
  if (!is_integer(odd_sum))
    throw std::logic_error("sum of an even number of half-integers must be integral");
  t += Integer(odd_sum.get_num());
  part.maximal_integral_sum = t;
  return part;
}

bool strengthened_gb(const Partition& part, int genus) {
  Integer bound = 2 * genus + part.n();
  bound -= (part.n_odd() % 2 == 0 && part.n_nonint() == 0) ? 1 : 2;
  return part.maximal_integral_sum >= bound;
}

std::optional<CommonRay> common_ray(const std::vector<ExactReal>& values) {
  if (values.empty()) return std::nullopt;
  const ExactReal& dir = values.front();
  if (dir.is_zero()) return std::nullopt;
  std::vector<Rational> ratios;
  ratios.reserve(values.size());
  for (const ExactReal& v : values) {
    auto q = v.ratio_to(dir);
    if (!q || *q <= 0) return std::nullopt;
    ratios.push_back(*q);
  }
  // ratios[i] = n_i / d_i; weights = ratios * lcm(d) / gcd(n * lcm(d) / d)
  Integer den_lcm = 1;
  for (const Rational& q : ratios) den_lcm = lcm(den_lcm, Integer(q.get_den()));
  std::vector<Integer> weights;
  weights.reserve(ratios.size());
  Integer g = 0;
  for (const Rational& q : ratios) {
    Integer w = Integer(q.get_num()) * (den_lcm / Integer(q.get_den()));
    g = gcd(g, w);
    weights.push_back(std::move(w));
  }
  for (Integer& w : weights) w /= g;
  CommonRay ray;
  ray.scale = dir * Rational(g, den_lcm);
  ray.weights = std::move(weights);
  return ray;
}

std::optional<RayDecomposition> ray_decomposition(const std::vector<ExactReal>& values) {
  if (values.empty()) return std::nullopt;
  for (const ExactReal& v : values) {
    if (!v.is_rational() || v.rational_part() <= 0) return std::nullopt;
  }
  auto ray = common_ray(values);
  if (!ray) return std::nullopt;
  RayDecomposition out;
  out.scale = ray->scale.rational_part();
  out.weights = std::move(ray->weights);
  return out;
}

std::map<Integer, SignedSumWitness> integer_signed_sums(const std::vector<Angle>& c) {
  // frontier of reachable partial sums, deduplicated by exact value
  std::map<ExactReal, std::vector<int>> states;
  states.emplace(ExactReal(), std::vector<int>{});
  for (const Angle& a : c) {
    std::map<ExactReal, std::vector<int>> next;
    for (const auto& [sum, signs] : states) {
      for (int eps : {+1, -1}) {
        ExactReal v = sum;
        if (eps > 0)
          v += a.value();
        else
          v -= a.value();
        auto it = next.find(v);
        if (it == next.end()) {
          std::vector<int> ext = signs;
          ext.push_back(eps);
          next.emplace(std::move(v), std::move(ext));
        }
      }
    }
    states = std::move(next);
  }
  std::map<Integer, SignedSumWitness> out;
  for (const auto& [sum, signs] : states) {
    if (!sum.is_rational()) continue;
    const Rational& q = sum.rational_part();
    if (q < 0 || !is_integer(q)) continue;
    Integer k(q.get_num());
    if (!out.count(k)) out.emplace(k, SignedSumWitness{signs, k});
  }
  return out;
}

}  // namespace conesphere
