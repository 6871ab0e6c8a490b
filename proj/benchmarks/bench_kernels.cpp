#include <benchmark/benchmark.h>

#include "ilan/derivative_table.hpp"
#include "ilan/problems.hpp"
#include "ilan/random.hpp"
#include "ilan/structured_kernels.hpp"

namespace {

using namespace ilan;

Matrix random_block(Index n, Index cols, std::uint64_t seed) {
  Rng rng(seed);
  Matrix W(n, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < n; ++i) W(i, j) = cplx(rng.normal(), rng.normal());
  return W;
}

// state.range(0) = grid N, state.range(1) = k
void BM_ZNaive(benchmark::State& state) {
  const SpmfNep nep = gen_delay_pde(static_cast<int>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  const DerivativeTable table(nep, 2 * k + 1);
  const Matrix W = random_block(nep.size(), k + 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(z_naive(W, nep, table));
}

void BM_ZDep(benchmark::State& state) {
  const SpmfNep nep = gen_delay_pde(static_cast<int>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  const Matrix W = random_block(nep.size(), k + 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(z_dep(W, nep));
}

void BM_ZLowrankFft(benchmark::State& state) {
  const SpmfNep nep = gen_delay_pde(static_cast<int>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  const DerivativeTable table(nep, 2 * k + 1);
  const GFactors f = g_factors(k, 20);
  const Matrix W = random_block(nep.size(), k + 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(z_lowrank_fft(W, nep, table, f));
}

void BM_ZPolyLowrank(benchmark::State& state) {
  SpmfNep base = gen_delay_pde(static_cast<int>(state.range(0)));
  std::vector<Term> terms(base.terms().begin(), base.terms().end());
  // diag(b) has full rank; tag it with its exact factor so the split applies.
  RealVector d = terms[2].matrix.to_dense().diagonal().real();
  terms[2].low_rank_factor = Matrix(d.cwiseSqrt().cast<cplx>().asDiagonal());
  const SpmfNep nep(base.size(), std::move(terms));
  const int k = static_cast<int>(state.range(1));
  const DerivativeTable table(nep, 2 * k + 1);
  const Matrix W = random_block(nep.size(), k + 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(z_poly_lowrank(W, nep, table));
}

void BM_HankelFft(benchmark::State& state) {
  const Index m = state.range(0);
  const Matrix seq = random_block(2 * m - 1, 1, 2);
  const Matrix X = random_block(m, 8, 3);
  const std::span<const cplx> s(seq.data(), static_cast<std::size_t>(seq.size()));
  for (auto _ : state) benchmark::DoNotOptimize(hankel_matmul(s, X));
}

void BM_HankelDense(benchmark::State& state) {
  const Index m = state.range(0);
  const Matrix seq = random_block(2 * m - 1, 1, 2);
  const Matrix X = random_block(m, 8, 3);
  const std::span<const cplx> s(seq.data(), static_cast<std::size_t>(seq.size()));
  for (auto _ : state) benchmark::DoNotOptimize(Matrix(hankel_dense(s) * X));
}

}  // namespace

BENCHMARK(BM_ZNaive)->Args({10, 50})->Args({20, 100})->Args({20, 400})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZDep)->Args({10, 50})->Args({20, 100})->Args({20, 400})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZLowrankFft)->Args({10, 50})->Args({20, 100})->Args({20, 400})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZPolyLowrank)->Args({10, 50})->Args({20, 100})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HankelFft)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_HankelDense)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
