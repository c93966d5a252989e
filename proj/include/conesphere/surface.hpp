#pragma once

#include "conesphere/angles.hpp"
#include "conesphere/assignment.hpp"

#include <map>
#include <string>
#include <vector>

namespace conesphere {

// Combinatorial avatar of a hemispherical surface: finitely many semi-infinite
// flat cylinders glued along boundary segments. Each cylinder's boundary is a
// cyclic sequence of segments; the pairing is a fixed-point-free involution
// identifying segments isometrically.
struct Cylinder {
  Rational circumference;             // turn units; square root of the residue
  std::vector<std::string> boundary;  // cyclic order of segment ids
};

struct JenkinsStrebelSurface {
  std::vector<Cylinder> cylinders;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::map<std::string, Rational> lengths;

  friend bool operator==(const JenkinsStrebelSurface& a, const JenkinsStrebelSurface& b) {
    auto key = [](const JenkinsStrebelSurface& s) {
      return std::make_tuple(s.pairs, s.lengths);
    };
    if (a.cylinders.size() != b.cylinders.size()) return false;
    for (size_t i = 0; i < a.cylinders.size(); ++i) {
      if (a.cylinders[i].circumference != b.cylinders[i].circumference ||
          a.cylinders[i].boundary != b.cylinders[i].boundary)
        return false;
    }
    return key(a) == key(b);
  }
};

struct ValidationIssue {
  std::string what;
  std::vector<std::string> ids;  // offending segment ids, possibly empty
};

// Empty result means the surface is well formed: every segment id lies on one
// boundary and in one pair, the pairing is a fixed-point-free involution,
// paired segments have equal positive length, each boundary sums to its
// circumference, and the glued complex is connected.
std::vector<ValidationIssue> validate(const JenkinsStrebelSurface& s);

struct SurfaceReport {
  int genus = 0;
  std::vector<int> equatorial_angles;       // corner count k per vertex class (angle k*pi)
  std::vector<Rational> pole_angles;        // circumference w per pole (angle 2*pi*w)
  bool is_square = false;                   // admits the +-1 cylinder coloring
  std::vector<Rational> period_generators;  // circumferences and segment lengths
  Monodromy monodromy_class = Monodromy::StrictDihedral;  // coaxial iff is_square
};

// Corner-orbit analysis. Vertex classes are the cycles of next-of-partner on
// segments; a class of k corners carries cone angle k*pi, each pole carries
// 2*pi*w. Genus comes from V - E + F = 2 - 2g. Throws std::invalid_argument
// if validate() reports issues.
SurfaceReport analyze(const JenkinsStrebelSurface& s);

// Angles of the spherical surface the gluing realizes. Entries equal to 2pi
// (turn 1) are dropped when drop_regular is set; the result can be empty (the
// round sphere).
AngleDistribution to_distribution(const JenkinsStrebelSurface& s, bool drop_regular);

// Surface file format: JSON with exactly the keys "cylinders" (objects with
// "w" and "boundary"), "pairs" and "lengths"; rationals as "p/q" strings.
// Unknown fields are rejected.
std::string surface_to_json(const JenkinsStrebelSurface& s);
JenkinsStrebelSurface surface_from_json(const std::string& text);  // throws on violations

}  // namespace conesphere
