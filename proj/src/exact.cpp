#include "conesphere/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace conesphere {

ExactReal ExactReal::generator(const std::string& id, Rational coeff) {
  if (id.empty()) throw std::invalid_argument("generator id must be nonempty");
  ExactReal v;
  if (coeff != 0) v.terms_.emplace_back(id, std::move(coeff));
  return v;
}

void ExactReal::prune() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.second == 0; }),
               terms_.end());
}

ExactReal& ExactReal::operator+=(const ExactReal& other) {
  rational_ += other.rational_;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  while (it != terms_.end() || jt != other.terms_.end()) {
    if (jt == other.terms_.end() || (it != terms_.end() && it->first < jt->first)) {
      merged.push_back(*it++);
    } else if (it == terms_.end() || jt->first < it->first) {
      merged.push_back(*jt++);
    } else {
      Rational c = it->second + jt->second;
      if (c != 0) merged.emplace_back(it->first, std::move(c));
      ++it;
      ++jt;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& other) {
  return *this += -other;
}

ExactReal& ExactReal::operator*=(const Rational& s) {
  rational_ *= s;
  for (auto& t : terms_) t.second *= s;
  prune();
  return *this;
}

ExactReal ExactReal::operator-() const {
  ExactReal v = *this;
  v.rational_ = -v.rational_;
  for (auto& t : v.terms_) t.second = -t.second;
  return v;
}

bool operator<(const ExactReal& a, const ExactReal& b) {
  if (a.rational_ != b.rational_) return a.rational_ < b.rational_;
  return a.terms_ < b.terms_;
}

std::optional<Rational> ExactReal::ratio_to(const ExactReal& other) const {
  if (other.is_zero()) return std::nullopt;
  // candidate ratio from the first nonzero component of `other`
  Rational q;
  if (other.rational_ != 0) {
    q = rational_ / other.rational_;
  } else {
    const auto& [id, coeff] = other.terms_.front();
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return t.first == id; });
    if (it == terms_.end()) return is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
    q = it->second / coeff;
  }
  ExactReal check = other;
  check *= q;
  if (check == *this) return q;
  return std::nullopt;
}

std::string ExactReal::str() const {
  std::ostringstream out;
  bool wrote = false;
  if (rational_ != 0 || terms_.empty()) {
    out << rational_str(rational_);
    wrote = true;
  }
  for (const auto& [id, coeff] : terms_) {
    if (wrote && coeff > 0) out << "+";
    if (coeff == 1) {
      out << id;
    } else if (coeff == -1) {
      out << "-" << id;
    } else {
      out << rational_str(coeff) << "*" << id;
    }
    wrote = true;
  }
  return out.str();
}

}  // namespace conesphere
