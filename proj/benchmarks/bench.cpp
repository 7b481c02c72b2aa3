// Microbenchmarks for the hot paths: parsing, evaluation, supposition, core
// extraction, table round trips, and the axiom battery.

#include <benchmark/benchmark.h>

#include <vector>

#include "popper/audit.hpp"
#include "popper/cores.hpp"
#include "popper/examples.hpp"
#include "popper/supposition.hpp"
#include "popper/table.hpp"

namespace {

void BM_ParseFormula(benchmark::State& state) {
  const std::string text = "~(O & ~S) -> (J <-> O | S & ~J)";
  for (auto _ : state) {
    benchmark::DoNotOptimize(popper::parse_formula(text));
  }
}
BENCHMARK(BM_ParseFormula);

void BM_PopperEval(benchmark::State& state) {
  const popper::EpistemicState s = popper::coin_model(16);
  const popper::Universe& u = s.universe();
  // Antecedent missing rank 0 entirely: forces the rank scan.
  const popper::Prop a = u.singleton(u.size() - 1);
  const popper::Prop b = u.full_prop();
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.popper_eval(b, a));
  }
}
BENCHMARK(BM_PopperEval);

void BM_Suppose(benchmark::State& state) {
  const popper::EpistemicState s = popper::coin_model(16);
  popper::Prop a = s.universe().full_prop();
  a = a - s.universe().singleton(0) - s.universe().singleton(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(popper::suppose(s, a));
  }
}
BENCHMARK(BM_Suppose);

void BM_CoresBruteforce(benchmark::State& state) {
  const popper::UniversePtr u = popper::indexed_universe(5);
  std::vector<popper::EpistemicState> states;
  popper::for_each_small_state(u, [&](const popper::EpistemicState& s) {
    if (states.size() < 16) states.push_back(s);
  });
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(popper::cores_bruteforce(states[i]));
    i = (i + 1) % states.size();
  }
}
BENCHMARK(BM_CoresBruteforce);

void BM_TableRoundTrip(benchmark::State& state) {
  const popper::EpistemicState s = popper::coin_model(4);  // 6 worlds
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        popper::from_conditional_table(popper::to_conditional_table(s)));
  }
}
BENCHMARK(BM_TableRoundTrip);

void BM_CheckAxioms(benchmark::State& state) {
  popper::GeneratorParams params;
  params.seed = 5;
  params.max_atoms = 3;
  const popper::EpistemicState s = popper::random_state(params);
  std::vector<popper::Prop> pool;
  for (unsigned long long m = 0; m < (1ull << s.universe().size()); ++m) {
    pool.push_back(popper::prop_from_mask(s.universe().size(), m));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(popper::check_axioms(s, pool));
  }
}
BENCHMARK(BM_CheckAxioms);

}  // namespace

BENCHMARK_MAIN();
