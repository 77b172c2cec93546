#include <benchmark/benchmark.h>

#include "skein/integrability.hpp"
#include "skein/invariants.hpp"
#include "skein/integrator.hpp"
#include "skein/moves.hpp"
#include "skein/rng.hpp"
#include "skein/table.hpp"

namespace {

using namespace skein;

// torus-braid diagrams give a clean crossing-count axis
Diagram torus2(int crossings) {
  std::vector<int> word(crossings, 1);
  return braid_closure(2, word);
}

void BM_BracketStateSum(benchmark::State& state) {
  const Diagram d = torus2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d, 16));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BracketStateSum)->DenseRange(5, 13, 2)->Complexity();

void BM_EnumerateMoveSites(benchmark::State& state) {
  const Diagram d = torus2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_move_sites(d));
}
BENCHMARK(BM_EnumerateMoveSites)->DenseRange(3, 11, 4);

void BM_SimplifyStabilized(benchmark::State& state) {
  // trefoil fattened by pokes and curls
  Rng rng(7);
  Diagram d = trefoil_left();
  for (int i = 0; i < state.range(0); ++i) {
    std::vector<MoveSite> adds;
    for (const auto& s : enumerate_move_sites(d))
      if (s.kind == MoveKind::r1_add_pos || s.kind == MoveKind::r2_add) adds.push_back(s);
    d = apply_move(d, adds[rng.pick(adds.size())]);
  }
  for (auto _ : state) benchmark::DoNotOptimize(simplify(d, 3000).diagram);
}
BENCHMARK(BM_SimplifyStabilized)->DenseRange(1, 3, 1);

void BM_Condition2Item(benchmark::State& state) {
  CorpusParams p;
  p.count = 1;
  p.walk_length = 3;
  p.max_crossings = static_cast<int>(state.range(0));
  p.seed = 5;
  const Corpus c = gen_order2_corpus({trefoil_left()}, p);
  const SingularInvariant f = *singular_invariant("d_jones");
  for (auto _ : state) benchmark::DoNotOptimize(check_condition2(f, c).passed);
}
BENCHMARK(BM_Condition2Item)->DenseRange(6, 10, 2);

void BM_DescendingIntegrate(benchmark::State& state) {
  const SingularInvariant f = *singular_invariant("d_jones");
  std::map<int, RingElem> base;
  base[1] = unlink_jones(1);
  const Diagram d = state.range(0) == 0 ? trefoil_left() : knot_5_2();
  for (auto _ : state) benchmark::DoNotOptimize(integrate(f, d, base));
}
BENCHMARK(BM_DescendingIntegrate)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
