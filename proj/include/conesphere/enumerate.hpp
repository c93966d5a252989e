#pragma once

#include "conesphere/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conesphere {

// Census bounds. Lengths live on the grid 1/denominator; a segment's scaled
// length is an integer in [1, max_scaled_length]. When `circumferences` is
// set, only cylinders with those circumferences are admitted.
struct CensusBounds {
  int max_segments = 4;
  int denominator = 1;
  int max_scaled_length = 1;
  std::optional<std::vector<Rational>> circumferences;
};

// All valid surfaces within bounds, one representative per canonical form,
// sorted by canonical key. The parallel kernel partitions the search space
// and merges deterministically; the serial variant is the brute-force
// reference the tests compare against.
std::vector<JenkinsStrebelSurface> enumerate_surfaces(const CensusBounds& bounds,
                                                      int jobs = 0);
std::vector<JenkinsStrebelSurface> enumerate_surfaces_serial(const CensusBounds& bounds);

struct SearchBounds {
  int max_segments = 8;
  int max_denominator = 8;  // finest length grid tried, in multiples of the circumference lcm
  int max_regular = 2;      // extra angle-2pi vertex classes allowed as subdivision points
  int jobs = 0;
};

enum class SearchStatus {
  Found,
  NoWitnessWithinBounds,
  BoundsExceeded,       // some admissible gluing needs more segments or a finer grid
  RejectedByGuard,      // settled by the monodromy guards, no search ran
  SymbolicInput,
};

struct SearchResult {
  SearchStatus status = SearchStatus::NoWitnessWithinBounds;
  std::optional<JenkinsStrebelSurface> witness;
  std::string note;
};

// Bounded exhaustive search for a hemispherical surface realizing the
// distribution with the requested monodromy class. Matching is up to regular
// points: to_distribution(witness, true) equals the request with its turn-1
// entries dropped. Deterministic: the returned witness is the first match in
// (assignment, denominator, extra-regular count, canonical key) order.
SearchResult search_witness(const AngleDistribution& dist, Monodromy cls,
                            const SearchBounds& bounds);

}  // namespace conesphere
