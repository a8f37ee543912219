// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "unc/expr.hpp"
#include "unc/mc.hpp"
#include "unc/propagation.hpp"

namespace {

unc::UncertainVector random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> val(0.5, 5.0);
  std::uniform_real_distribution<double> err(0.0, 0.2);
  std::vector<double> v(n);
  std::vector<double> e(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = val(rng);
    e[i] = err(rng);
  }
  return unc::UncertainVector(std::move(v), std::move(e));
}

template <bool Parallel>
void BM_Unary(benchmark::State& state) {
  const auto x = random_vector(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    auto r = Parallel ? unc::propagate_unary(unc::UnaryFn::sin, x)
                      : unc::serial::propagate_unary(unc::UnaryFn::sin, x);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_Binary(benchmark::State& state) {
  const auto x = random_vector(static_cast<std::size_t>(state.range(0)), 2);
  const auto y = random_vector(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    auto r = Parallel ? unc::propagate_binary(unc::BinaryFn::pow, x, y)
                      : unc::serial::propagate_binary(unc::BinaryFn::pow, x, y);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_MonteCarlo(benchmark::State& state) {
  const auto ast = unc::parse("x/y");
  const unc::UncertainEnv env{{"x", {5.0, 0.01}}, {"y", {1.0, 0.01}}};
  unc::McConfig cfg;
  cfg.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto r = Parallel ? unc::mc_sample(*ast, env, cfg) : unc::serial::mc_sample(*ast, env, cfg);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Unary<false>)->Name("unary_sin/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_Unary<true>)->Name("unary_sin/openmp")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_Binary<false>)->Name("binary_pow/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_Binary<true>)->Name("binary_pow/openmp")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_MonteCarlo<false>)->Name("mc_sample/serial")->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarlo<true>)->Name("mc_sample/openmp")->Arg(1 << 20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
