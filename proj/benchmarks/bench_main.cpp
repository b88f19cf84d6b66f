#include <benchmark/benchmark.h>

#include <random>

#include "thhku/bockstein.hpp"
#include "thhku/consistency.hpp"
#include "thhku/differential_graph.hpp"
#include "thhku/local_matrix.hpp"
#include "thhku/ss_pages.hpp"
#include "thhku/thh_presentations.hpp"
#include "thhku/torsion_block.hpp"

using namespace thhku;

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-20, 20);
  LocalMatrix M(n, n, {3, false});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M.set(i, j, Scalar(entry(rng)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(M));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_RandomComplexPages(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const FilteredComplex fc = random_filtered_complex(seed++);
    benchmark::DoNotOptimize(ss_pages(fc, std::max(1, fc.n_max() - fc.n_min())));
  }
}
BENCHMARK(BM_RandomComplexPages);

void BM_RunRulesU(benchmark::State& state) {
  const long p = state.range(0);
  const int D = static_cast<int>(2 * p * p * p);
  const NamedSS ss = build_e1(SSId::u, p, D);
  for (auto _ : state) benchmark::DoNotOptimize(run_rules(ss));
}
BENCHMARK(BM_RunRulesU)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PresentationGroups(benchmark::State& state) {
  const long p = state.range(0);
  const int D = static_cast<int>(2 * p * p * p);
  for (auto _ : state) {
    const PresentedModule m(presentation_thh_ku(p, D));
    benchmark::DoNotOptimize(m.groups(D));
  }
}
BENCHMARK(BM_PresentationGroups)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_TorsionBlock(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(torsion_block(3, n));
}
BENCHMARK(BM_TorsionBlock)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DifferentialGraph(benchmark::State& state) {
  const long p = state.range(0);
  long long n = 1;
  for (int i = 0; i < 6; ++i) n *= p;
  for (auto _ : state) benchmark::DoNotOptimize(differential_graph(p, n));
}
BENCHMARK(BM_DifferentialGraph)->Arg(3)->Arg(5);

void BM_VerifyConsistency(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_consistency(3, 54));
}
BENCHMARK(BM_VerifyConsistency)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
