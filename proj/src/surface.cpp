#include "conesphere/surface.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace conesphere {

std::vector<ValidationIssue> validate(const JenkinsStrebelSurface& s) {
  std::vector<ValidationIssue> issues;
  std::map<std::string, int> seg_cylinder;
  for (size_t c = 0; c < s.cylinders.size(); ++c) {
    if (s.cylinders[c].circumference <= 0)
      issues.push_back({"cylinder circumference must be positive", {}});
    if (s.cylinders[c].boundary.empty())
      issues.push_back({"cylinder boundary must contain at least one segment", {}});
    for (const std::string& id : s.cylinders[c].boundary) {
      if (!seg_cylinder.emplace(id, static_cast<int>(c)).second)
        issues.push_back({"segment appears on more than one boundary slot", {id}});
    }
  }
  std::map<std::string, std::string> partner;
  for (const auto& [a, b] : s.pairs) {
    if (a == b) issues.push_back({"segment paired with itself", {a}});
    if (!partner.emplace(a, b).second) issues.push_back({"segment paired twice", {a}});
    if (a != b && !partner.emplace(b, a).second) issues.push_back({"segment paired twice", {b}});
    if (!seg_cylinder.count(a)) issues.push_back({"paired segment not on any boundary", {a}});
    if (!seg_cylinder.count(b)) issues.push_back({"paired segment not on any boundary", {b}});
  }
  for (const auto& [id, c] : seg_cylinder) {
    (void)c;
    if (!partner.count(id)) issues.push_back({"segment not paired", {id}});
    if (!s.lengths.count(id)) issues.push_back({"segment without a length", {id}});
  }
  for (const auto& [id, len] : s.lengths) {
    if (!seg_cylinder.count(id)) {
      issues.push_back({"length given for unknown segment", {id}});
      continue;
    }
    if (len <= 0) issues.push_back({"segment length must be positive", {id}});
  }
  for (const auto& [a, b] : s.pairs) {
    auto la = s.lengths.find(a);
    auto lb = s.lengths.find(b);
    if (la != s.lengths.end() && lb != s.lengths.end() && la->second != lb->second)
      issues.push_back({"paired segments have unequal lengths", {a, b}});
  }
  if (!issues.empty()) return issues;

  for (size_t c = 0; c < s.cylinders.size(); ++c) {
    Rational sum = 0;
    for (const std::string& id : s.cylinders[c].boundary) sum += s.lengths.at(id);
    if (sum != s.cylinders[c].circumference) {
      issues.push_back({"boundary lengths do not sum to the circumference",
                        {s.cylinders[c].boundary.front()}});
    }
  }

  // connectivity of the cylinder/pairing multigraph
  if (!s.cylinders.empty()) {
    std::vector<char> seen(s.cylinders.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      for (const auto& [a, b] : s.pairs) {
        int ca = seg_cylinder.at(a);
        int cb = seg_cylinder.at(b);
        if (ca == c && !seen[cb]) {
          seen[cb] = 1;
          queue.push_back(cb);
        }
        if (cb == c && !seen[ca]) {
          seen[ca] = 1;
          queue.push_back(ca);
        }
      }
    }
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(s.cylinders.size()))
      issues.push_back({"glued complex is disconnected", {}});
  }
  return issues;
}

SurfaceReport analyze(const JenkinsStrebelSurface& s) {
  auto issues = validate(s);
  if (!issues.empty()) throw std::invalid_argument("analyze: invalid surface: " + issues[0].what);

  // index segments
  std::vector<std::string> ids;
  std::map<std::string, int> index;
  std::vector<int> cyl_of, next_of;
  for (size_t c = 0; c < s.cylinders.size(); ++c) {
    const auto& boundary = s.cylinders[c].boundary;
    int first = static_cast<int>(ids.size());
    for (size_t i = 0; i < boundary.size(); ++i) {
      index[boundary[i]] = static_cast<int>(ids.size());
      ids.push_back(boundary[i]);
      cyl_of.push_back(static_cast<int>(c));
      next_of.push_back(first + static_cast<int>((i + 1) % boundary.size()));
    }
  }
  std::vector<int> partner(ids.size(), -1);
  for (const auto& [a, b] : s.pairs) {
    partner[index.at(a)] = index.at(b);
    partner[index.at(b)] = index.at(a);
  }

  // vertex classes: cycles of rho = next o partner acting on segment starts
  SurfaceReport report;
  std::vector<char> visited(ids.size(), 0);
  for (size_t i = 0; i < ids.size(); ++i) {
    if (visited[i]) continue;
    int k = 0;
    int cur = static_cast<int>(i);
    do {
      visited[cur] = 1;
      ++k;
      cur = next_of[partner[cur]];
    } while (cur != static_cast<int>(i));
    report.equatorial_angles.push_back(k);
  }
  std::sort(report.equatorial_angles.begin(), report.equatorial_angles.end(), std::greater<>());

  const int vertices = static_cast<int>(report.equatorial_angles.size());
  const int edges = static_cast<int>(s.pairs.size());
  const int faces = static_cast<int>(s.cylinders.size());
  int chi = vertices - edges + faces;
  if ((2 - chi) % 2 != 0) throw std::logic_error("odd Euler characteristic for a closed surface");
  report.genus = (2 - chi) / 2;

  for (const auto& c : s.cylinders) report.pole_angles.push_back(c.circumference);
  std::sort(report.pole_angles.begin(), report.pole_angles.end(), std::greater<>());

  // two-colorability of the cylinder/pairing multigraph
  std::vector<int> color(s.cylinders.size(), -1);
  bool bipartite = true;
  for (size_t start = 0; start < s.cylinders.size() && bipartite; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<int> queue{static_cast<int>(start)};
    while (!queue.empty() && bipartite) {
      int c = queue.front();
      queue.pop_front();
      for (const auto& [a, b] : s.pairs) {
        int ca = cyl_of[index.at(a)];
        int cb = cyl_of[index.at(b)];
        if (ca != c && cb != c) continue;
        int other = (ca == c) ? cb : ca;
        if (other == c) {
          bipartite = false;
          break;
        }
        if (color[other] == -1) {
          color[other] = 1 - color[c];
          queue.push_back(other);
        } else if (color[other] == color[c]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  report.is_square = bipartite;
  report.monodromy_class = bipartite ? Monodromy::Coaxial : Monodromy::StrictDihedral;

  std::set<Rational> periods;
  for (const auto& c : s.cylinders) periods.insert(c.circumference);
  for (const auto& [id, len] : s.lengths) {
    (void)id;
    periods.insert(len);
  }
  report.period_generators.assign(periods.begin(), periods.end());
  return report;
}

AngleDistribution to_distribution(const JenkinsStrebelSurface& s, bool drop_regular) {
  SurfaceReport report = analyze(s);
  AngleDistribution dist;
  dist.genus = report.genus;
  for (int k : report.equatorial_angles) {
    Rational turn(k, 2);
    turn.canonicalize();
    if (drop_regular && turn == 1) continue;
    dist.angles.push_back(Angle(turn));
  }
  for (const Rational& w : report.pole_angles) {
    if (drop_regular && w == 1) continue;
    dist.angles.push_back(Angle(w));
  }
  std::sort(dist.angles.begin(), dist.angles.end(),
            [](const Angle& a, const Angle& b) { return b < a; });
  return dist;
}

std::string surface_to_json(const JenkinsStrebelSurface& s) {
  nlohmann::json doc;
  doc["cylinders"] = nlohmann::json::array();
  for (const auto& c : s.cylinders) {
    nlohmann::json jc;
    jc["w"] = rational_str(c.circumference);
    jc["boundary"] = c.boundary;
    doc["cylinders"].push_back(std::move(jc));
  }
  doc["pairs"] = nlohmann::json::array();
  for (const auto& [a, b] : s.pairs) doc["pairs"].push_back({a, b});
  doc["lengths"] = nlohmann::json::object();
  for (const auto& [id, len] : s.lengths) doc["lengths"][id] = rational_str(len);
  return doc.dump(2);
}

JenkinsStrebelSurface surface_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("surface file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("surface file must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "cylinders" && key != "pairs" && key != "lengths")
      throw std::invalid_argument("unknown field in surface file: " + key);
  }
  JenkinsStrebelSurface s;
  if (!doc.contains("cylinders") || !doc["cylinders"].is_array())
    throw std::invalid_argument("surface file needs a \"cylinders\" array");
  for (const auto& jc : doc["cylinders"]) {
    if (!jc.is_object()) throw std::invalid_argument("cylinder entries must be objects");
    for (const auto& [key, value] : jc.items()) {
      (void)value;
      if (key != "w" && key != "boundary")
        throw std::invalid_argument("unknown field in cylinder: " + key);
    }
    Cylinder c;
    c.circumference = parse_rational(jc.at("w").get<std::string>());
    for (const auto& id : jc.at("boundary")) c.boundary.push_back(id.get<std::string>());
    s.cylinders.push_back(std::move(c));
  }
  if (!doc.contains("pairs") || !doc["pairs"].is_array())
    throw std::invalid_argument("surface file needs a \"pairs\" array");
  for (const auto& jp : doc["pairs"]) {
    if (!jp.is_array() || jp.size() != 2)
      throw std::invalid_argument("pairs must be two-element arrays");
    s.pairs.emplace_back(jp[0].get<std::string>(), jp[1].get<std::string>());
  }
  if (!doc.contains("lengths") || !doc["lengths"].is_object())
    throw std::invalid_argument("surface file needs a \"lengths\" object");
  for (const auto& [id, len] : doc["lengths"].items())
    s.lengths[id] = parse_rational(len.get<std::string>());
  return s;
}

}  // namespace conesphere
