#include <benchmark/benchmark.h>

#include "stringtop/builtin.hpp"
#include "stringtop/dialgebra/axioms.hpp"
#include "stringtop/dialgebra/format.hpp"
#include "stringtop/graph/open_string_suite.hpp"
#include "stringtop/surface/bialgebra_suite.hpp"
#include "stringtop/tqft/decomposition.hpp"

using namespace stringtop;

namespace {

Execution mode_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(std::string(execution_name(mode_of(state))) + " threads=" + std::to_string(worker_count()));
}

void BM_BialgebraSuite(benchmark::State& state) {
  const auto symbol = surface::SurfaceSymbol::preset("torus-1");
  surface::BialgebraSuiteConfig config;
  config.exhaustive_max_length = 3;
  config.random_max_length = 6;
  config.samples = 50;
  for (auto _ : state) benchmark::DoNotOptimize(surface::run_bialgebra_suite(symbol, config, mode_of(state)));
  label(state);
}

void BM_OpenStringSuite(benchmark::State& state) {
  graph::OpenStringSuiteConfig config;
  config.graphs = 8;
  config.max_length = 3;
  for (auto _ : state) benchmark::DoNotOptimize(graph::run_open_string_suite(config, mode_of(state)));
  label(state);
}

void BM_TqftInvariance(benchmark::State& state) {
  const auto d = dialgebra::parse_dialgebra(builtin::dialgebra_text("dual-numbers"));
  tqft::InvarianceConfig config;
  config.samples = 5;
  for (auto _ : state) benchmark::DoNotOptimize(tqft::run_invariance(d, config, mode_of(state)));
  label(state);
}

void BM_Classify(benchmark::State& state) {
  const auto d = dialgebra::parse_dialgebra(builtin::dialgebra_text("matrix2"));
  for (auto _ : state) benchmark::DoNotOptimize(dialgebra::classify(d, mode_of(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_BialgebraSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpenStringSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TqftInvariance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
