#include <random>

#include <benchmark/benchmark.h>

#include "selfsim/action.hpp"
#include "selfsim/finitegpd.hpp"
#include "selfsim/homol.hpp"
#include "selfsim/kthy.hpp"
#include "selfsim/zlin.hpp"

using namespace selfsim;

namespace {

ActionSystem example() {
  Graph g;
  VertexId u = g.add_vertex("u"), v = g.add_vertex("v"), w = g.add_vertex("w");
  EdgeId e1 = g.add_edge("e1", u, u), e2 = g.add_edge("e2", v, u), e3 = g.add_edge("e3", u, v);
  EdgeId e4 = g.add_edge("e4", w, v), e5 = g.add_edge("e5", w, v), e6 = g.add_edge("e6", v, w);
  Alphabet al;
  al.add({"a", u, v});
  al.add({"b", v, w});
  al.add({"c", w, v});
  auto wd = [&](const char* s) { return parse_word(g, al, s); };
  std::vector<GeneratorTable> t{
      {0, {{e1, {e2, wd("u")}}, {e3, {e6, wd("b")}}}, {}},
      {1, {{e2, {e5, wd("a")}}, {e6, {e4, wd("c")}}}, {}},
      {2, {{e4, {e2, wd("a^-1")}}, {e5, {e6, wd("b")}}}, {}},
  };
  return ActionSystem::build(std::move(g), std::move(al), std::move(t));
}

void BM_IsUnitPower(benchmark::State& state) {
  auto sys = example();
  Word w = sys.parse_word("a^-1 c b a").power(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sys.is_unit(w));
}
BENCHMARK(BM_IsUnitPower)->Arg(1)->Arg(4)->Arg(8);

void BM_PseudoFreeProbe(benchmark::State& state) {
  auto sys = example();
  for (auto _ : state) benchmark::DoNotOptimize(pseudo_free_probe(sys, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PseudoFreeProbe)->Arg(3)->Arg(4);

void BM_Snf(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long long>(rng() % 21) - 10;
  for (auto _ : state) benchmark::DoNotOptimize(snf(a));
}
BENCHMARK(BM_Snf)->Arg(5)->Arg(10)->Arg(20);

void BM_FiniteHomology(benchmark::State& state) {
  auto G = product(pair_groupoid(static_cast<std::size_t>(state.range(0))), cyclic_group(2));
  for (auto _ : state) benchmark::DoNotOptimize(homology(G, 3));
}
BENCHMARK(BM_FiniteHomology)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Pipelines(benchmark::State& state) {
  auto sys = example();
  DegreeCocycle c{{1, 1, 1}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(k_pipeline(sys, c));
    benchmark::DoNotOptimize(homology_pipeline(sys, c));
  }
}
BENCHMARK(BM_Pipelines)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
