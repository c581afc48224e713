// Microbenchmarks for the hot paths: index-set scans, convex hulls,
// parameter certification, and the composed circle-model step.
#include <benchmark/benchmark.h>

#include "rotset/denjoy.hpp"
#include "rotset/diagonal.hpp"
#include "rotset/geometry.hpp"
#include "rotset/index_sets.hpp"
#include "rotset/rho.hpp"
#include "rotset/roundness.hpp"

namespace {

using namespace rotset;

const RhoParam& high_param() {
  static const RhoParam r = parse_rho("0.93 + pi*1e-5", 12);
  return r;
}

const RhoParam& low_param() {
  static const RhoParam r = parse_rho("0.31 + pi*1e-5", 12);
  return r;
}

void BM_scan_index_set(benchmark::State& state) {
  const RhoParam& r = high_param();
  const std::int64_t bound = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_index_set(r, bound));
  }
}
BENCHMARK(BM_scan_index_set)->Arg(10000)->Arg(100000);

void BM_blocks_index_set(benchmark::State& state) {
  const RhoParam& r = high_param();
  const std::int64_t bound = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(blocks_index_set(r, bound));
  }
}
BENCHMARK(BM_blocks_index_set)->Arg(10000)->Arg(100000);

void BM_parse_and_certify(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_rho("0.93 + pi*1e-5", 12));
  }
}
BENCHMARK(BM_parse_and_certify);

void BM_family_hull(benchmark::State& state) {
  const RhoParam& r = high_param();
  const std::int64_t bound = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(family_hull(r, bound, 1));
  }
}
BENCHMARK(BM_family_hull)->Arg(1000)->Arg(10000);

void BM_gamma_supremum(benchmark::State& state) {
  const RhoParam& r = low_param();
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_supremum(r, state.range(0)));
  }
}
BENCHMARK(BM_gamma_supremum)->Arg(10000)->Arg(100000);

void BM_roundness(benchmark::State& state) {
  const RhoParam& r = high_param();
  for (auto _ : state) {
    benchmark::DoNotOptimize(roundness(r, state.range(0)));
  }
}
BENCHMARK(BM_roundness)->Arg(2000)->Arg(10000);

void BM_composed_step(benchmark::State& state) {
  static const DenjoyMap map = build_denjoy(high_param(), 1000);
  LiftState s;
  s.point = {Circle::H, 0.123456};
  for (auto _ : state) {
    s = composed_step(map, s);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_composed_step);

}  // namespace

BENCHMARK_MAIN();
