#include <benchmark/benchmark.h>

#include <random>

#include "maxdet/bounds.hpp"
#include "maxdet/constructions.hpp"
#include "maxdet/exact.hpp"
#include "maxdet/schedule.hpp"
#include "maxdet/search.hpp"

namespace {

using namespace maxdet;

IntMatrix random_matrix(std::size_t n, int lo, int hi) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  }
  return m;
}

void BM_DetExact(benchmark::State& state) {
  const IntMatrix m = random_matrix(std::size_t(state.range(0)), -3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(det_exact(m));
  }
}
BENCHMARK(BM_DetExact)->Arg(5)->Arg(8)->Arg(12)->Arg(16);

void BM_VolSquaredBiplane(benchmark::State& state) {
  const ZeroOneMatrix b = biplane_11();
  for (auto _ : state) {
    benchmark::DoNotOptimize(vol_squared(b));
  }
}
BENCHMARK(BM_VolSquaredBiplane);

void BM_ScheduleBound(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(schedule_bound(make_schedule(state.range(0),
                                                          state.range(0), 17)));
  }
}
BENCHMARK(BM_ScheduleBound)->Arg(1000)->Arg(100000);

void BM_OptimalQ(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_q(state.range(0)));
  }
}
BENCHMARK(BM_OptimalQ)->Arg(49)->Arg(200)->Arg(1000);

void BM_GreedyClosedBound(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_closed_bound(1000, 1000, 17));
  }
}
BENCHMARK(BM_GreedyClosedBound);

void BM_ProjectivePlane(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(projective_plane(state.range(0)));
  }
}
BENCHMARK(BM_ProjectivePlane)->Arg(5)->Arg(11);

void BM_SearchS(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        search_max_det(MatrixClass::S, state.range(0), state.range(1)));
  }
}
BENCHMARK(BM_SearchS)->Args({6, 2})->Args({7, 2})->Args({7, 3});

void BM_SearchT(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        search_max_det(MatrixClass::T, state.range(0), state.range(1)));
  }
}
BENCHMARK(BM_SearchT)->Args({5, 2})->Args({6, 2})->Args({6, 3});

}  // namespace

BENCHMARK_MAIN();
