#include "conesphere/assignment.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace conesphere {

const char* monodromy_str(Monodromy m) {
  switch (m) {
    case Monodromy::Coaxial: return "coaxial";
    case Monodromy::StrictDihedral: return "strict-dihedral";
    case Monodromy::DihedralAny: return "dihedral-any";
  }
  return "?";
}

std::optional<GuardReason> monodromy_guard(const Partition& part, int genus, Monodromy cls) {
  if (genus == 0 && part.n_odd() == 0 && part.n_nonint() == 0)
    return GuardReason{"trivial-monodromy",
                       "all angles in 2pi*Z on the sphere: trivial monodromy, classified as a "
                       "branched cover (out of scope)"};
  if (cls == Monodromy::StrictDihedral && genus == 0) {
    if (part.n_odd() < 2)
      return GuardReason{"lemma6.2", "genus 0 needs at least two odd singularities"};
    if (part.n_odd() + part.n_nonint() < 3)
      return GuardReason{"egt-coaxial",
                         "two odd singularities and no non-integer one force co-axial monodromy"};
  }
  return std::nullopt;
}

namespace {

std::string values_str(const std::vector<ExactReal>& vals) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < vals.size(); ++i) {
    if (i) out << ",";
    out << vals[i].str();
  }
  out << ")";
  return out.str();
}

std::string orders_str(const std::vector<int>& orders, int poles, const char* pole,
                       const char* prefix) {
  std::ostringstream out;
  out << prefix << "(";
  for (size_t i = 0; i < orders.size(); ++i) {
    if (i) out << ",";
    out << orders[i];
  }
  if (poles > 0) {
    if (!orders.empty()) out << ",";
    out << pole << "^" << poles;
  }
  out << ")";
  return out.str();
}

}  // namespace

std::string StratumAssignment::str() const {
  return orders_str(orders, double_poles, "-2", "Q") + " circumferences " +
         values_str(circumferences);
}

std::string CoaxialAssignment::str() const {
  return orders_str(zero_orders, simple_poles, "-1", "H") + " |residues| " +
         values_str(pole_magnitudes);
}

std::vector<StratumAssignment> enumerate_quadratic_assignments(const AngleDistribution& dist,
                                                               AssignmentPolicy policy) {
  Partition part = partition(dist);
  const int n = dist.size();
  const int genus = dist.genus;
  const bool strict_bound = part.n_odd() % 2 == 0 && part.n_nonint() == 0;

  std::vector<int> integral;  // indices of even/odd singularities
  for (int i = 0; i < n; ++i)
    if (parity_of(dist.angles[i]) != Parity::NonInteger) integral.push_back(i);
  const int m = static_cast<int>(integral.size());

  std::vector<StratumAssignment> out;
  std::map<std::pair<std::vector<int>, std::vector<ExactReal>>, bool> seen;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    StratumAssignment asg;
    Rational order_sum2 = 0;  // sum of d_i in turn units, i.e. sum(2u - 2) / 2
    std::vector<int> pole_side;
    for (int j = 0; j < m; ++j) {
      int idx = integral[j];
      if (mask & (1u << j)) {
        asg.equatorial.push_back(idx);
        order_sum2 += dist.angles[idx].turn() - 1;
      } else {
        pole_side.push_back(idx);
      }
    }
    Rational sum_d = 2 * order_sum2;  // each d_i = 2u - 2 is an integer
    if (Integer(sum_d.get_num()) % 2 != 0) continue;  // needs an even count of odd picks
    long long sum = sum_d.get_num().get_si();
    int s = static_cast<int>(asg.equatorial.size());
    long long bound = 4LL * genus - 4 + 2LL * (n - s);
    if (sum < bound) continue;
    if (policy == AssignmentPolicy::Classifier && strict_bound && sum == bound) continue;
    long long t = (sum - (4LL * genus - 4)) / 2;
    if (t < 1) continue;

    for (int idx : asg.equatorial) {
      Rational d = 2 * dist.angles[idx].turn() - 2;
      asg.orders.push_back(static_cast<int>(d.get_num().get_si()));
    }
    std::sort(asg.orders.begin(), asg.orders.end(), std::greater<>());
    if (policy == AssignmentPolicy::Classifier && genus == 0) {
      bool has_odd = std::any_of(asg.orders.begin(), asg.orders.end(),
                                 [](int d) { return (d % 2 + 2) % 2 == 1; });
      if (!has_odd) continue;  // not primitive
    }

    asg.double_poles = static_cast<int>(t);
    for (int idx : pole_side) asg.circumferences.push_back(dist.angles[idx].value());
    for (const Angle& a : part.nonintegers) asg.circumferences.push_back(a.value());
    asg.unit_poles = asg.double_poles - static_cast<int>(asg.circumferences.size());
    for (int k = 0; k < asg.unit_poles; ++k) asg.circumferences.push_back(ExactReal(1));
    std::sort(asg.circumferences.begin(), asg.circumferences.end());

    auto key = std::make_pair(asg.orders, asg.circumferences);
    if (seen.emplace(std::move(key), true).second) out.push_back(std::move(asg));
  }
  // largest equatorial order sum first: the proofs' "maximal" choice leads
  std::stable_sort(out.begin(), out.end(),
                   [](const StratumAssignment& a, const StratumAssignment& b) {
                     long long sa = 0, sb = 0;
                     for (int d : a.orders) sa += d;
                     for (int d : b.orders) sb += d;
                     if (sa != sb) return sa > sb;
                     if (a.orders != b.orders) return a.orders > b.orders;
                     return a.circumferences < b.circumferences;
                   });
  return out;
}

std::vector<CoaxialAssignment> enumerate_coaxial_assignments(const AngleDistribution& dist,
                                                             AssignmentPolicy policy) {
  const int n = dist.size();
  const int genus = dist.genus;
  std::vector<int> ints;  // indices of integer-coefficient angles
  for (int i = 0; i < n; ++i) {
    const Angle& a = dist.angles[i];
    if (!a.has_generator_part() && is_integer(a.turn())) ints.push_back(i);
  }
  const int m = static_cast<int>(ints.size());

  std::vector<CoaxialAssignment> out;
  std::map<std::pair<std::vector<int>, std::vector<ExactReal>>, bool> seen;
  const unsigned full = (1u << m) - 1;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (policy == AssignmentPolicy::Classifier && mask != full) continue;
    CoaxialAssignment asg;
    long long zero_sum = 0;
    std::vector<int> pole_side;
    for (int j = 0; j < m; ++j) {
      int idx = ints[j];
      if (mask & (1u << j)) {
        asg.equatorial.push_back(idx);
        long long a = dist.angles[idx].turn().get_num().get_si();
        zero_sum += a - 1;
        if (a - 1 > 0) asg.zero_orders.push_back(static_cast<int>(a - 1));
      } else {
        pole_side.push_back(idx);
      }
    }
    long long t = zero_sum - (2LL * genus - 2);
    long long pole_count = (n - static_cast<int>(asg.equatorial.size()));
    if (t < 1 || t < pole_count) continue;
    std::sort(asg.zero_orders.begin(), asg.zero_orders.end(), std::greater<>());
    asg.simple_poles = static_cast<int>(t);
    for (int idx : pole_side) asg.pole_magnitudes.push_back(dist.angles[idx].value());
    for (int i = 0; i < n; ++i) {
      const Angle& a = dist.angles[i];
      if (a.has_generator_part() || !is_integer(a.turn()))
        asg.pole_magnitudes.push_back(a.value());
    }
    asg.unit_poles = asg.simple_poles - static_cast<int>(asg.pole_magnitudes.size());
    if (asg.unit_poles < 0) continue;
    for (int k = 0; k < asg.unit_poles; ++k) asg.pole_magnitudes.push_back(ExactReal(1));
    std::sort(asg.pole_magnitudes.begin(), asg.pole_magnitudes.end());

    auto key = std::make_pair(asg.zero_orders, asg.pole_magnitudes);
    if (seen.emplace(std::move(key), true).second) out.push_back(std::move(asg));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CoaxialAssignment& a, const CoaxialAssignment& b) {
                     long long sa = 0, sb = 0;
                     for (int d : a.zero_orders) sa += d;
                     for (int d : b.zero_orders) sb += d;
                     if (sa != sb) return sa > sb;
                     if (a.zero_orders != b.zero_orders) return a.zero_orders > b.zero_orders;
                     return a.pole_magnitudes < b.pole_magnitudes;
                   });
  return out;
}

}  // namespace conesphere
