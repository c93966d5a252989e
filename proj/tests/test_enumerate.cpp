#include "conesphere/enumerate.hpp"

#include "doctest.h"

#include <set>

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

TEST_CASE("census: hand-checked tiny bounds") {
  // two segments, unit grid, lengths up to 2: the folded sector (two pi
  // points) at circumference 2 or 4, and the round two-hemisphere sphere at
  // circumference 1 or 2
  CensusBounds b;
  b.max_segments = 2;
  b.denominator = 1;
  b.max_scaled_length = 2;
  auto all = enumerate_surfaces(b);
  CHECK(all.size() == 4);

  b.max_scaled_length = 1;
  CHECK(enumerate_surfaces(b).size() == 2);

  b.circumferences = {{q("1")}};
  auto spheres = enumerate_surfaces(b);
  REQUIRE(spheres.size() == 1);
  auto report = analyze(spheres[0]);
  CHECK(report.genus == 0);
  CHECK(report.is_square);
  CHECK(report.pole_angles == std::vector<Rational>{q("1"), q("1")});
}

TEST_CASE("census: serial reference agrees with the parallel kernel") {
  for (CensusBounds b : {CensusBounds{4, 1, 2, std::nullopt}, CensusBounds{6, 2, 1, std::nullopt},
                         CensusBounds{6, 1, 1, std::nullopt}}) {
    auto fast = enumerate_surfaces(b);
    auto slow = enumerate_surfaces_serial(b);
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
  }
}

TEST_CASE("census: every surface validates, is canonical-unique, and satisfies Euler parity") {
  CensusBounds b;
  b.max_segments = 6;
  b.max_scaled_length = 2;
  auto all = enumerate_surfaces(b);
  CHECK(all.size() > 50);
  std::set<std::string> seen;
  for (const auto& s : all) {
    CHECK(validate(s).empty());
    CHECK(seen.insert(surface_to_json(s)).second);
    auto report = analyze(s);
    CHECK(report.genus >= 0);
    if (report.is_square)
      for (int k : report.equatorial_angles) CHECK(k % 2 == 0);
  }
}

TEST_CASE("census regression count at max_segments=4, lengths <= 2") {
  // frozen after the first exhaustive run; guards the enumeration kernel
  CensusBounds b;
  b.max_segments = 4;
  b.denominator = 1;
  b.max_scaled_length = 2;
  auto all = enumerate_surfaces(b);
  CHECK(all.size() == 20);
}

TEST_CASE("witness: the basic example surface") {
  SearchBounds bounds;
  bounds.max_segments = 4;
  auto res = search_witness(dist_of(0, {q("1/2"), q("1/2"), q("3/4")}),
                            Monodromy::StrictDihedral, bounds);
  REQUIRE(res.status == SearchStatus::Found);
  auto report = analyze(*res.witness);
  CHECK(report.genus == 0);
  CHECK(report.equatorial_angles == std::vector<int>{1, 1});
  CHECK(report.pole_angles == std::vector<Rational>{q("3/4")});
  CHECK_FALSE(report.is_square);
  // round trip
  auto realized = to_distribution(*res.witness, true);
  CHECK(realized.angles.size() == 3);
  CHECK(realized.angles[0] == Angle(q("3/4")));
}

TEST_CASE("witness: the worked non-realizable example exhausts") {
  SearchBounds bounds;
  bounds.max_segments = 10;
  bounds.max_denominator = 8;
  bounds.max_regular = 1;
  auto res = search_witness(dist_of(0, {q("3/2"), q("3/2"), q("3/2"), q("3/4"), q("3/4")}),
                            Monodromy::StrictDihedral, bounds);
  CHECK(res.status == SearchStatus::NoWitnessWithinBounds);
}

TEST_CASE("witness: coaxial torus with one 6pi point") {
  SearchBounds bounds;
  bounds.max_segments = 8;
  auto res = search_witness(dist_of(1, {q("3")}), Monodromy::Coaxial, bounds);
  REQUIRE(res.status == SearchStatus::Found);
  auto report = analyze(*res.witness);
  CHECK(report.genus == 1);
  CHECK(report.is_square);
  CHECK(report.equatorial_angles == std::vector<int>{6});
}

TEST_CASE("witness search is deterministic") {
  SearchBounds bounds;
  bounds.max_segments = 6;
  auto a = search_witness(dist_of(0, {q("1/2"), q("1/2"), q("3/4")}),
                          Monodromy::StrictDihedral, bounds);
  auto b = search_witness(dist_of(0, {q("1/2"), q("1/2"), q("3/4")}),
                          Monodromy::StrictDihedral, bounds);
  REQUIRE(a.status == SearchStatus::Found);
  REQUIRE(b.status == SearchStatus::Found);
  CHECK(*a.witness == *b.witness);
}

TEST_CASE("witness: guards and symbolic input") {
  auto res = search_witness(dist_of(0, {q("2"), q("2")}), Monodromy::StrictDihedral, {});
  CHECK(res.status == SearchStatus::RejectedByGuard);

  AngleDistribution sym;
  sym.genus = 0;
  sym.angles = {Angle(ExactReal::generator("x")), Angle(q("1/2")), Angle(q("1/2"))};
  CHECK(search_witness(sym, Monodromy::StrictDihedral, {}).status == SearchStatus::SymbolicInput);
}

TEST_CASE("witness: bounds exceeded is distinct from exhausted") {
  SearchBounds tiny;
  tiny.max_segments = 2;
  tiny.max_denominator = 2;
  // needs six equatorial corners
  auto res = search_witness(dist_of(1, {q("3")}), Monodromy::Coaxial, tiny);
  CHECK(res.status == SearchStatus::BoundsExceeded);
}
