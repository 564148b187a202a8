// Benchmarks for the hot paths: criterion evaluation, relation search, the
// bounded survey, modular elimination, and the jet oracle.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "coxcheck/jet.hpp"
#include "coxcheck/matrix.hpp"
#include "coxcheck/moduli.hpp"
#include "coxcheck/survey.hpp"
#include "coxcheck/triangle.hpp"
#include "coxcheck/wps.hpp"

using namespace coxcheck;

namespace {

Triangle narrow_triangle() {
  return triangle_from_slopes(Rational(-11, 3), Rational(-4, 3),
                              Rational(2, 3));
}

Triangle wide_triangle() {
  return triangle_from_slopes(Rational(-2, 3), Rational(1, 2), Rational(8));
}

void BM_TriangleCriterion(benchmark::State& state) {
  Triangle t = narrow_triangle();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_triangle_criterion(t));
  }
}
BENCHMARK(BM_TriangleCriterion);

void BM_NormalFan(benchmark::State& state) {
  Triangle t = wide_triangle();
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_fan_rays(t));
  }
}
BENCHMARK(BM_NormalFan);

void BM_LatticePoints(benchmark::State& state) {
  Triangle t = wide_triangle();
  BigInt m(105);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattice_points(t, m));
  }
}
BENCHMARK(BM_LatticePoints)->Unit(benchmark::kMillisecond);

void BM_FindRelations(benchmark::State& state) {
  Weights wts(19, 11, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_relations(wts));
  }
}
BENCHMARK(BM_FindRelations);

void BM_Qualifies(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qualifies(7, 15, 26));
  }
}
BENCHMARK(BM_Qualifies);

void BM_Enumerate(benchmark::State& state) {
  const std::int64_t bound = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_qualifying(bound));
  }
}
BENCHMARK(BM_Enumerate)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ModularElimination(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::uint64_t p = (1ULL << 61) - 1;
  std::mt19937_64 rng(42);
  std::vector<std::uint64_t> entries(n * n);
  for (auto& e : entries) e = rng() % p;
  for (auto _ : state) {
    state.PauseTiming();
    ModMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, entries[i * n + j]);
    }
    state.ResumeTiming();
    benchmark::DoNotOptimize(m.echelonize());
  }
}
BENCHMARK(BM_ModularElimination)
    ->Arg(256)
    ->Arg(512)
    ->Arg(1024)
    ->Unit(benchmark::kMillisecond);

void BM_JetSystemModMatrix(benchmark::State& state) {
  JetSystem sys(narrow_triangle(), BigInt(42));
  const std::uint64_t p = (1ULL << 61) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sys.to_mod_matrix(p));
  }
}
BENCHMARK(BM_JetSystemModMatrix)->Unit(benchmark::kMillisecond);

void BM_OracleExact(benchmark::State& state) {
  Triangle t = narrow_triangle();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        vanishing_oracle(t, BigInt(42), OracleMode::exact));
  }
}
BENCHMARK(BM_OracleExact)->Unit(benchmark::kMillisecond);

void BM_ModuliBuiltin(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_builtin());
  }
}
BENCHMARK(BM_ModuliBuiltin)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
