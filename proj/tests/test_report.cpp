#include "conesphere/report.hpp"

#include "doctest.h"

using namespace conesphere;

namespace {

Rational q(const char* s) { return parse_rational(s); }

AngleDistribution dist_of(int genus, const std::vector<Rational>& turns) {
  AngleDistribution d;
  d.genus = genus;
  for (const Rational& t : turns) d.angles.push_back(Angle(t));
  return d;
}

}  // namespace

TEST_CASE("verdict json round trips exactly") {
  std::vector<std::pair<AngleDistribution, Monodromy>> cases = {
      {dist_of(0, {q("3/2"), q("3/2"), q("3/2"), q("3/4"), q("3/4")}), Monodromy::StrictDihedral},
      {dist_of(1, {q("3")}), Monodromy::Coaxial},
      {dist_of(1, {q("3")}), Monodromy::DihedralAny},
      {dist_of(0, {q("1/2"), q("1/2"), q("3/4")}), Monodromy::StrictDihedral},
  };
  for (const auto& [dist, cls] : cases) {
    Verdict v = classify(dist, cls);
    auto doc = verdict_to_json(v);
    Verdict back = verdict_from_json(doc);
    CHECK(back == v);
  }
}

TEST_CASE("verdict json round trips a witness") {
  ClassifyOptions opts;
  opts.attach_witness = true;
  opts.witness_bounds.max_segments = 4;
  Verdict v = classify(dist_of(0, {q("1/2"), q("1/2"), q("3/4")}), Monodromy::StrictDihedral, opts);
  REQUIRE(v.witness);
  Verdict back = verdict_from_json(verdict_to_json(v));
  CHECK(back == v);
  CHECK(*back.witness == *v.witness);
}
