// Serial reference kernels vs their OpenMP versions.
#include <benchmark/benchmark.h>

#include <random>

#include "fpf/kernels.hpp"
#include "fpf/properties.hpp"

using namespace fpf;

namespace {

struct IdealSample {
  std::vector<ExponentVector> gens;
  ExponentVector box;
  Grading grading{std::vector<std::uint32_t>{1, 1, 1}};
};

// zero-dimensional ideal in 3 variables: pure powers plus `extra` random generators
IdealSample sample_ideal(std::size_t extra, std::uint32_t top) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint32_t> e(0, top - 1);
  IdealSample s;
  s.box = {top, top, top};
  for (std::size_t i = 0; i < 3; ++i) {
    ExponentVector pure(3, 0);
    pure[i] = top;
    s.gens.push_back(pure);
  }
  for (std::size_t k = 0; k < extra; ++k) s.gens.push_back({e(rng), e(rng), e(rng)});
  return s;
}

void BM_inclusion_exclusion_serial(benchmark::State& state) {
  const auto s = sample_ideal(state.range(0), 40);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::inclusion_exclusion_numerator(s.gens, s.grading));
}

void BM_inclusion_exclusion_parallel(benchmark::State& state) {
  const auto s = sample_ideal(state.range(0), 40);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::inclusion_exclusion_numerator(s.gens, s.grading));
}

void BM_enumerate_serial(benchmark::State& state) {
  const auto s = sample_ideal(8, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::enumerate_staircase(s.gens, s.grading, s.box));
}

void BM_enumerate_parallel(benchmark::State& state) {
  const auto s = sample_ideal(8, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_staircase(s.gens, s.grading, s.box));
}

std::vector<double> sample_coeffs(std::size_t n) {
  std::vector<double> c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = double((j * 7919) % 101);
  return c;
}

void BM_exponential_sum_serial(benchmark::State& state) {
  const auto c = sample_coeffs(state.range(0));
  const auto ys = real_grid(-4, 4, 64);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::exponential_sum(c, 1.0 / 1024, ys));
}

void BM_exponential_sum_parallel(benchmark::State& state) {
  const auto c = sample_coeffs(state.range(0));
  const auto ys = real_grid(-4, 4, 64);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::exponential_sum(c, 1.0 / 1024, ys));
}

}  // namespace

BENCHMARK(BM_inclusion_exclusion_serial)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_inclusion_exclusion_parallel)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_enumerate_serial)->Arg(64)->Arg(128);
BENCHMARK(BM_enumerate_parallel)->Arg(64)->Arg(128);
BENCHMARK(BM_exponential_sum_serial)->Arg(1 << 10)->Arg(1 << 14);
BENCHMARK(BM_exponential_sum_parallel)->Arg(1 << 10)->Arg(1 << 14);

BENCHMARK_MAIN();
