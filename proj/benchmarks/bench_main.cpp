#include <benchmark/benchmark.h>

#include "hweavoa/hweavoa.hpp"

namespace {

using namespace hweavoa;

void BM_Evaluate(benchmark::State& state) {
  const int id = static_cast<int>(state.range(0));
  const auto& s = benchmarks::spec(id);
  RandomSource rng(1);
  Vector x(s.default_dim);
  for (auto& v : x) v = rng.uniform(s.lower, s.upper);
  for (auto _ : state) benchmark::DoNotOptimize(benchmarks::evaluate(id, x));
  state.SetLabel(s.label());
}
BENCHMARK(BM_Evaluate)->DenseRange(1, 23);

void BM_LevyFlight(benchmark::State& state) {
  RandomSource rng(7);
  const auto dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel::levy_flight(dim, rng));
}
BENCHMARK(BM_LevyFlight)->Arg(2)->Arg(30);

void BM_HenonInit(benchmark::State& state) {
  RandomSource rng(3);
  const auto space = SearchSpace::uniform(30, -100, 100);
  for (auto _ : state) benchmark::DoNotOptimize(strategies::henon_init(30, space, rng, {}));
}
BENCHMARK(BM_HenonInit);

// One full iteration of the flock, per variant.
void BM_Step(benchmark::State& state) {
  const auto names = variant_names();
  VariantConfig cfg = VariantConfig::named(names[static_cast<std::size_t>(state.range(0))]);
  const Problem problem = benchmarks::make_problem(1);
  CountedProblem counted(problem);
  RandomSource rng(11);
  Population pop = initialize(cfg, counted, rng);
  int t = 0;
  for (auto _ : state) {
    t = t % cfg.max_iters + 1;
    pop = step(std::move(pop), t, cfg, counted, rng);
  }
  state.SetLabel(cfg.name());
  state.SetItemsProcessed(counted.evaluations());
}
BENCHMARK(BM_Step)->DenseRange(0, 7);

void BM_FullRun(benchmark::State& state) {
  VariantConfig cfg = VariantConfig::named(state.range(0) ? "hweavoa" : "avoa");
  cfg.max_iters = 100;
  const Problem problem = benchmarks::make_problem(9);
  for (auto _ : state) benchmark::DoNotOptimize(run(cfg, problem).final_best.fitness);
  state.SetLabel(cfg.name());
}
BENCHMARK(BM_FullRun)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Wilcoxon(benchmark::State& state) {
  RandomSource rng(5);
  Vector a(30), b(30);
  for (auto& v : a) v = rng.normal();
  for (auto& v : b) v = rng.normal(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(stats::wilcoxon_ranksum_p(a, b));
}
BENCHMARK(BM_Wilcoxon);

}  // namespace

BENCHMARK_MAIN();
