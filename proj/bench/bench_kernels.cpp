// Serial reference vs OpenMP kernels.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "wsld/kernels.hpp"
#include "wsld/spectral.hpp"

using namespace wsld;

namespace {

std::vector<double> random_vector(std::size_t n) {
  std::mt19937 gen(42);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(gen);
  return v;
}

template <kernels::Execution Ex>
void BM_Convolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto scheme = scheme_for_grid(4, 1.5, ShiftTuple::stable_default(), n);
  const auto u = random_vector(n + 1);
  std::vector<double> out(n + 1);
  for (auto _ : state) {
    kernels::convolve(scheme.phi, scheme.m(), u, out, Side::left, Ex);
    benchmark::DoNotOptimize(out.data());
  }
}

template <kernels::Execution Ex>
void BM_Matvec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto scheme = scheme_for_grid(4, 1.5, ShiftTuple::stable_default(), n);
  const auto a = assemble_left(scheme, n).entries;
  const auto u = random_vector(n + 1);
  std::vector<double> out(n + 1);
  for (auto _ : state) {
    kernels::matvec(a, u, out, Ex);
    benchmark::DoNotOptimize(out.data());
  }
}

template <kernels::Execution Ex>
void BM_DefinitenessScan(benchmark::State& state) {
  const auto alphas = default_alpha_grid();
  const auto xs = default_x_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(definiteness_scan(3, ShiftTuple::stable_default(), alphas, xs, Ex));
  }
}

}  // namespace

BENCHMARK(BM_Convolve<kernels::Execution::serial>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Convolve<kernels::Execution::parallel>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Matvec<kernels::Execution::serial>)->RangeMultiplier(4)->Range(64, 2048);
BENCHMARK(BM_Matvec<kernels::Execution::parallel>)->RangeMultiplier(4)->Range(64, 2048);
BENCHMARK(BM_DefinitenessScan<kernels::Execution::serial>)->Arg(256)->Arg(2048);
BENCHMARK(BM_DefinitenessScan<kernels::Execution::parallel>)->Arg(256)->Arg(2048);

BENCHMARK_MAIN();
