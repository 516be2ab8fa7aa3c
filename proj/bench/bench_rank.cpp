// Bareiss rank (OpenMP row updates) vs the serial rational Gauss-Jordan
// reference, on conditions matrices of random fat-point schemes.

#include <benchmark/benchmark.h>

#include "starconf/hilbert.hpp"
#include "starconf/linalg.hpp"
#include "starconf/suites.hpp"

using namespace starconf;

namespace {

// Three general fat points of multiplicity m in the plane, at degree 2m - 1.
IntMatrix fat_conditions(unsigned m) {
  Rng rng(2024);
  const auto pts = random_general_points(rng, 2, 3);
  FatScheme z(2);
  for (const auto& p : pts) z.add(p, m);
  return conditions_matrix(z, 2 * m - 1);
}

void BM_BareissRank(benchmark::State& state) {
  const IntMatrix m = fat_conditions(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}

void BM_ReferenceRank(benchmark::State& state) {
  const RatMatrix m = to_rational(fat_conditions(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(reference::rank(m));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}

}  // namespace

BENCHMARK(BM_BareissRank)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReferenceRank)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
