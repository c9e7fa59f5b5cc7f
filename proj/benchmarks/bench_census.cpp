#include <benchmark/benchmark.h>

#include "census/finitegroups.hpp"
#include "census/fuchsian.hpp"
#include "census/homology.hpp"
#include "census/lowindex.hpp"
#include "census/presentations.hpp"

namespace {

void BM_FreeGroupCensus(benchmark::State& state) {
  census::Presentation P = census::free_presentation(2);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census::count_subgroups(P, n));
}
BENCHMARK(BM_FreeGroupCensus)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ModularCensus(benchmark::State& state) {
  census::Presentation P = census::fuchsian_presentation(census::Signature(0, 1, {2, 3}));
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census::enumerate_subgroups(P, n).size());
}
BENCHMARK(BM_ModularCensus)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CosetEnumeration(benchmark::State& state) {
  census::Presentation P =
      census::spherical_presentation(census::SphericalKind::parse("P120"));
  for (auto _ : state)
    benchmark::DoNotOptimize(census::coset_enumeration(P, {}, 4096).index);
}
BENCHMARK(BM_CosetEnumeration)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  // Relation matrix with mixed torsion and free rank.
  int n = static_cast<int>(state.range(0));
  census::IntegerMatrix M(n, n + 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n + 2; ++j) M.at(i, j) = (i + 2) * (j + 1) % 17 - 8;
  for (auto _ : state) {
    census::SmithResult S = census::smith_normal_form(M);
    benchmark::DoNotOptimize(S.diagonal.size());
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond);

void BM_SurfaceAbelianization(benchmark::State& state) {
  census::Presentation P = census::fuchsian_presentation(census::Signature(3, 0, {}));
  for (auto _ : state) benchmark::DoNotOptimize(census::abelianization(P).rank);
}
BENCHMARK(BM_SurfaceAbelianization)->Unit(benchmark::kMicrosecond);

void BM_SubgroupLattice(benchmark::State& state) {
  census::FiniteGroup G =
      census::spherical_group(census::SphericalKind::parse("P48"), 2000);
  for (auto _ : state) benchmark::DoNotOptimize(census::all_subgroups(G).subgroups.size());
}
BENCHMARK(BM_SubgroupLattice)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
