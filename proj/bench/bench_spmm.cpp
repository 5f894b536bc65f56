#include <benchmark/benchmark.h>

#include <random>

#include "wgt/arith/sparse_matrix.hpp"
#include "wgt/rep.hpp"

namespace {

wgt::SparseMatrix random_matrix(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  wgt::SparseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!keep(eng)) continue;
      wgt::Scalar v(num(eng), den(eng));
      v.canonicalize();
      m.add_to(i, j, v);
    }
  }
  return m;
}

void BM_Parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 0.05, 1);
  const auto b = random_matrix(n, 0.05, 2);
  for (auto _ : state) benchmark::DoNotOptimize(wgt::multiply(a, b));
}

void BM_Reference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 0.05, 1);
  const auto b = random_matrix(n, 0.05, 2);
  for (auto _ : state) benchmark::DoNotOptimize(wgt::multiply_reference(a, b));
}

// Products of generator coefficients from an actual module.
void RepProduct(benchmark::State& state, bool parallel) {
  const auto pyr = wgt::Pyramid::from_rows({2, 2, 3});
  const auto rep = wgt::build_representation(pyr, wgt::generic_weight(pyr));
  const auto& a = rep.B_poly(2).coeff(0);
  const auto& b = rep.C_poly(2).coeff(0);
  state.counters["dim"] = static_cast<double>(rep.dim());
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? wgt::multiply(a, b) : wgt::multiply_reference(a, b));
  }
}

void BM_RepParallel(benchmark::State& state) { RepProduct(state, true); }
void BM_RepReference(benchmark::State& state) { RepProduct(state, false); }

}  // namespace

BENCHMARK(BM_Parallel)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_Reference)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_RepParallel);
BENCHMARK(BM_RepReference);

BENCHMARK_MAIN();
