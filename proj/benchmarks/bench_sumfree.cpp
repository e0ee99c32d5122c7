#include <benchmark/benchmark.h>

#include "sumfree/construction.hpp"
#include "sumfree/graph.hpp"
#include "sumfree/search.hpp"
#include "sumfree/sumset.hpp"
#include "sumfree/verification.hpp"

using namespace sumfree;

namespace {

ResidueSet construction(std::int64_t n) { return build_full_set(derive_params(4, n)); }

void BM_FoldSumset(benchmark::State& state) {
  const auto s = construction(401);
  const int fold = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fold_sumset({s, fold, Ambient::modular}));
}
BENCHMARK(BM_FoldSumset)->Arg(2)->Arg(4)->Arg(5);

void BM_BruteForceSumset(benchmark::State& state) {
  const auto s = ResidueSet::from_members(Modulus(41), {1, 5, 11, 30, 36, 40});
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_sumset({s, 4, Ambient::modular}));
}
BENCHMARK(BM_BruteForceSumset);

void BM_RestrictedSumset(benchmark::State& state) {
  const auto s = construction(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(restricted_sumset(s, 4));
}
BENCHMARK(BM_RestrictedSumset)->Arg(363)->Arg(401)->Unit(benchmark::kMillisecond);

void BM_CertifyProposition(benchmark::State& state) {
  const auto s = construction(401);
  for (auto _ : state) benchmark::DoNotOptimize(certify_proposition(s, 4));
}
BENCHMARK(BM_CertifyProposition)->Unit(benchmark::kMillisecond);

void BM_PsiSearch(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(psi_search(n, 4));
}
BENCHMARK(BM_PsiSearch)->Arg(53)->Arg(80)->Arg(116)->Unit(benchmark::kMillisecond);

void BM_CycleFree(benchmark::State& state) {
  const auto g = Graph::from_cayley(CayleyGraph(construction(401)));
  for (auto _ : state) benchmark::DoNotOptimize(is_cycle_free(g, 5));
}
BENCHMARK(BM_CycleFree)->Unit(benchmark::kMillisecond);

void BM_GraphCheck(benchmark::State& state) {
  const CayleyGraph cg(construction(401));
  for (auto _ : state) benchmark::DoNotOptimize(certify_cayley_graph(cg, 4));
}
BENCHMARK(BM_GraphCheck)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
