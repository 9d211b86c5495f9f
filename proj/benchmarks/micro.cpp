#include <benchmark/benchmark.h>

#include "eulerhg/edge_cuts.hpp"
#include "eulerhg/generators.hpp"
#include "eulerhg/oracle.hpp"
#include "eulerhg/solvers.hpp"

namespace {

using namespace eulerhg;

std::vector<Hypergraph> corpus(std::size_t n, std::size_t m) {
  GenSpec spec;
  spec.count = 32;
  spec.seed = 1;
  spec.max_vertices = n;
  spec.max_edges = m;
  spec.max_edge_size = 5;
  return generate(spec);
}

template <Strategy S, Mode M>
void BM_Solve(benchmark::State& state) {
  const auto instances = corpus(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  SolverConfig cfg;
  cfg.strategy = S;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(instances[i++ % instances.size()], M, cfg).decision);
  }
}

BENCHMARK(BM_Solve<Strategy::Standard, Mode::Family>)->Arg(5)->Arg(7)->Arg(9);
BENCHMARK(BM_Solve<Strategy::Collapse, Mode::Family>)->Arg(5)->Arg(7)->Arg(9);
BENCHMARK(BM_Solve<Strategy::Oracle, Mode::Family>)->Arg(5)->Arg(7)->Arg(9);
BENCHMARK(BM_Solve<Strategy::Standard, Mode::Tour>)->Arg(5)->Arg(7)->Arg(9);
BENCHMARK(BM_Solve<Strategy::Collapse, Mode::Tour>)->Arg(5)->Arg(7)->Arg(9);
BENCHMARK(BM_Solve<Strategy::Oracle, Mode::Tour>)->Arg(5)->Arg(7)->Arg(9);

void BM_MinimumCutExhaustive(benchmark::State& state) {
  const auto instances = corpus(static_cast<std::size_t>(state.range(0)), 2 * static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(minimum_edge_cut_exhaustive(instances[i++ % instances.size()]));
}
BENCHMARK(BM_MinimumCutExhaustive)->Arg(8)->Arg(12);

void BM_MinimumCutPendantPairs(benchmark::State& state) {
  const auto instances = corpus(static_cast<std::size_t>(state.range(0)), 2 * static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(minimum_edge_cut_pendant_pairs(instances[i++ % instances.size()]));
}
BENCHMARK(BM_MinimumCutPendantPairs)->Arg(8)->Arg(12)->Arg(24);

}  // namespace
BENCHMARK_MAIN();
