#include <benchmark/benchmark.h>

#include <random>

#include "bttb/bccb_transform.hpp"
#include "bttb/dense_assembly.hpp"
#include "bttb/fast_apply.hpp"
#include "bttb/harness.hpp"

namespace {

using namespace bttb;

KernelParams params_for(std::int64_t kind) {
  return kind == 0 ? KernelParams::gravity() : KernelParams::magnetic(12.0, 63.0, 50000.0);
}

std::vector<double> input(const GridSpec& g, ApplyMode mode) {
  std::mt19937_64 gen(1);
  return uniform_vector(std::size_t(mode == ApplyMode::forward ? g.n() : g.m()), gen);
}

void DenseBuild(benchmark::State& state) {
  const GridSpec g = scaled_problem(state.range(0), 0.0);
  const KernelParams p = params_for(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_dense(g, p));
}

void TransformBuild(benchmark::State& state) {
  const GridSpec g = scaled_problem(state.range(0), 0.0);
  const KernelParams p = params_for(state.range(1));
  (void)build_transform_stack(g, p);
  for (auto _ : state) benchmark::DoNotOptimize(build_transform_stack(g, p));
}

template <ApplyMode Mode>
void DenseApply(benchmark::State& state) {
  const GridSpec g = scaled_problem(state.range(0), 0.0);
  const DenseSensitivity d = assemble_dense(g, params_for(state.range(1)));
  const auto x = input(g, Mode);
  for (auto _ : state) benchmark::DoNotOptimize(dense_apply(d, x, Mode));
}

template <ApplyMode Mode>
void TransformApply(benchmark::State& state) {
  const GridSpec g = scaled_problem(state.range(0), 0.0);
  const TransformStack s = build_transform_stack(g, params_for(state.range(1)));
  const auto x = input(g, Mode);
  (void)apply(s, x, Mode);
  for (auto _ : state) benchmark::DoNotOptimize(apply(s, x, Mode));
}

// Args: problem index, kernel (0 gravity, 1 magnetic).
void Sizes(benchmark::internal::Benchmark* b) {
  b->ArgNames({"problem", "kernel"});
  for (std::int64_t k = 1; k <= 3; ++k)
    for (std::int64_t kind = 0; kind <= 1; ++kind) b->Args({k, kind});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(DenseBuild)->Apply(Sizes);
BENCHMARK(TransformBuild)->Apply(Sizes);
BENCHMARK(DenseApply<ApplyMode::forward>)->Apply(Sizes);
BENCHMARK(DenseApply<ApplyMode::transpose>)->Apply(Sizes);
BENCHMARK(TransformApply<ApplyMode::forward>)->Apply(Sizes);
BENCHMARK(TransformApply<ApplyMode::transpose>)->Apply(Sizes);

BENCHMARK_MAIN();
