// Serial reference kernels against their OpenMP counterparts.

#include "qtrefftz/linalg.hpp"
#include "qtrefftz/qtrefftz.hpp"
#include "qtrefftz/random.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qtrefftz;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols)
{
  std::mt19937_64 rng(rows * 7919 + cols);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = random_rational(rng, 4);
  return m;
}

void BM_rref_serial(benchmark::State& state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n + 8);
  for (auto _ : state)
    benchmark::DoNotOptimize(rref_serial(m));
}

void BM_rref_parallel(benchmark::State& state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n + 8);
  for (auto _ : state)
    benchmark::DoNotOptimize(rref_parallel(m));
}

void BM_enumerate_serial(benchmark::State& state)
{
  const int p = static_cast<int>(state.range(0));
  const auto eps = sample_variable_jet(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_basis_serial(eps, p));
}

void BM_enumerate_parallel(benchmark::State& state)
{
  const int p = static_cast<int>(state.range(0));
  const auto eps = sample_variable_jet(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_basis(eps, p));
}

} // namespace

BENCHMARK(BM_rref_serial)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_parallel)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
