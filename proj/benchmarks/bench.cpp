// Microbenchmarks for the hot paths: group closure, conjugacy machinery,
// set enumeration, and the pruned homomorphism search.
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "braidquot/catalog.hpp"
#include "braidquot/group.hpp"
#include "braidquot/presentation.hpp"
#include "braidquot/report.hpp"
#include "braidquot/search.hpp"
#include "braidquot/tss.hpp"

using namespace braidquot;

namespace {

void BM_BuildGroup(benchmark::State& state, const std::string& token) {
  for (auto _ : state) {
    Group g = build_group(token);
    benchmark::DoNotOptimize(g.order());
  }
}

void BM_ConjugacyClasses(benchmark::State& state, const std::string& token) {
  for (auto _ : state) {
    Group g = build_group(token);  // fresh group: the classes are cached per group
    benchmark::DoNotOptimize(g.conjugacy_classes().count());
  }
}

void BM_ProductThroughput(benchmark::State& state) {
  Group g = build_group("S:6");
  std::mt19937 rng(12345);
  std::uniform_int_distribution<Eid> pick(0, static_cast<Eid>(g.order() - 1));
  std::vector<std::pair<Eid, Eid>> pairs(4096);
  for (auto& p : pairs) p = {pick(rng), pick(rng)};
  for (auto _ : state)
    for (const auto& [a, b] : pairs) benchmark::DoNotOptimize(g.product(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}

void BM_TssEnumerate(benchmark::State& state, const std::string& token, int k) {
  Group g = build_group(token);
  g.conjugacy_classes();  // pre-warm the caches; measure the enumeration alone
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_tss(g, k, 1u << 27, token).classes.size());
}

void BM_Search(benchmark::State& state, const std::string& pres_token,
               const std::string& group_token, SearchMode mode) {
  const Presentation p = presentation_from_token(pres_token);
  Group g = build_group(group_token);
  g.conjugacy_classes();
  SearchOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    const SearchReport r = search(p, g, mode, opts, group_token);
    benchmark::DoNotOptimize(r.verdict);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_BuildGroup, s6, "S:6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BuildGroup, psl2_11, "PSL2:11")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ConjugacyClasses, s6, "S:6")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductThroughput);
BENCHMARK_CAPTURE(BM_TssEnumerate, s6_k3, "S:6", 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TssEnumerate, psl2_13_k3, "PSL2:13", 3)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Search, none_bnp6_psl2_7, "bnp:6", "PSL2:7",
                  SearchMode::nontrivial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Search, found_bnp6_a6, "bnp:6", "A:6", SearchMode::nontrivial)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
