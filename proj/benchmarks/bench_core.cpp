#include <benchmark/benchmark.h>

#include "fiberwalk/binomial.hpp"
#include "fiberwalk/fiber.hpp"
#include "fiberwalk/models.hpp"
#include "fiberwalk/sampler.hpp"

using namespace fiberwalk;

static void BM_SnfNoThreeFactor(benchmark::State& state) {
  const int I = static_cast<int>(state.range(0));
  auto m = models::no_three_factor(I, I, I);
  for (auto _ : state) benchmark::DoNotOptimize(intlin::snf(m.A));
  state.SetLabel(std::to_string(m.A.rows()) + "x" + std::to_string(m.A.cols()));
}
BENCHMARK(BM_SnfNoThreeFactor)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSecondDifference(benchmark::State& state) {
  auto m = models::second_difference_family(static_cast<int>(state.range(0)));
  auto spec = fiber::make_spec(m.A, m.u);
  std::size_t size = 0;
  for (auto _ : state) size = fiber::enumerate_fiber(spec).size();
  state.counters["elements"] = static_cast<double>(size);
}
BENCHMARK(BM_EnumerateSecondDifference)->DenseRange(4, 8)->Unit(benchmark::kMicrosecond);

static void BM_ConnectingRadius(benchmark::State& state) {
  auto m = models::second_difference_family(static_cast<int>(state.range(0)));
  auto F = fiber::enumerate_fiber(fiber::make_spec(m.A, m.u));
  for (auto _ : state) benchmark::DoNotOptimize(fiber::connecting_radius(F, m.B, 100));
  state.counters["elements"] = static_cast<double>(F.size());
}
BENCHMARK(BM_ConnectingRadius)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_MinExcursionBadBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto m = models::bad_basis_family(n);
  auto F = fiber::enumerate_fiber(fiber::make_spec(m.A, m.u));
  for (auto _ : state) benchmark::DoNotOptimize(fiber::min_excursion(F, m.B, 2 * n));
}
BENCHMARK(BM_MinExcursionBadBasis)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

static void BM_Saturation(benchmark::State& state) {
  auto m = models::simple_example();
  binomial::SaturationOptions opts;
  opts.cap = state.range(0);
  std::size_t count = 0;
  for (auto _ : state) count = binomial::saturation_generators(m.B, opts).binomials.size();
  state.counters["generators"] = static_cast<double>(count);
}
BENCHMARK(BM_Saturation)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_SamplerSteps(benchmark::State& state) {
  auto m = models::simple_example();
  sampler::FiberContext ctx(fiber::enumerate_fiber(fiber::make_spec(m.A, m.u)), m.B);
  sampler::ChainConfig c;
  c.algorithm = static_cast<sampler::Algorithm>(state.range(0));
  c.steps = 10000;
  c.seed = 1;
  c.bound = c.algorithm == sampler::Algorithm::BoundedExcursion ? 2 : 16;
  for (auto _ : state) benchmark::DoNotOptimize(sampler::run_chain(ctx, *ctx.lookup(m.u), c));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.steps));
  state.SetLabel(std::string(sampler::to_string(c.algorithm)));
}
BENCHMARK(BM_SamplerSteps)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
