#include "conesphere/enumerate.hpp"

#include <benchmark/benchmark.h>

using namespace conesphere;

namespace {

CensusBounds bench_bounds() {
  CensusBounds b;
  b.max_segments = 8;
  b.denominator = 1;
  b.max_scaled_length = 1;
  return b;
}

void BM_census_serial(benchmark::State& state) {
  auto bounds = bench_bounds();
  for (auto _ : state) {
    auto out = enumerate_surfaces_serial(bounds);
    benchmark::DoNotOptimize(out);
  }
}

void BM_census_parallel(benchmark::State& state) {
  auto bounds = bench_bounds();
  for (auto _ : state) {
    auto out = enumerate_surfaces(bounds, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(out);
  }
}

void BM_witness_search(benchmark::State& state) {
  AngleDistribution dist;
  dist.genus = 0;
  for (const char* t : {"3/2", "3/2", "3/2", "3/4", "3/4"})
    dist.angles.push_back(Angle(parse_rational(t)));
  SearchBounds bounds;
  bounds.max_segments = 8;
  bounds.max_denominator = 8;
  bounds.max_regular = 1;
  for (auto _ : state) {
    auto out = search_witness(dist, Monodromy::StrictDihedral, bounds);
    benchmark::DoNotOptimize(out);
  }
}

}  // namespace

BENCHMARK(BM_census_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census_parallel)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_witness_search)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
