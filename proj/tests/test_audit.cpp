#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "popper/audit.hpp"
#include "popper/cores.hpp"
#include "popper/examples.hpp"
#include "popper/nmr.hpp"
#include "popper/supposition.hpp"

using namespace popper;

namespace {

std::vector<Prop> full_pool(const Universe& u) {
  std::vector<Prop> pool;
  for (unsigned long long m = 0; m < (1ull << u.size()); ++m) {
    pool.push_back(prop_from_mask(u.size(), m));
  }
  return pool;
}

const AxiomResult& axiom(const AuditReport& report, const std::string& name) {
  for (const auto& r : report.results) {
    if (r.name == name) return r;
  }
  FAIL("no axiom named " << name);
  static AxiomResult dummy;
  return dummy;
}

}  // namespace

TEST_SUITE("audit") {

TEST_CASE("the generator is a pure function of its parameters") {
  GeneratorParams params;
  params.seed = 1;
  const EpistemicState a = random_state(params);
  const EpistemicState b = random_state(params);
  CHECK(a == b);

  bool any_different = false;
  for (std::uint64_t seed = 2; seed < 12 && !any_different; ++seed) {
    GeneratorParams other;
    other.seed = seed;
    any_different = !(random_state(other) == a);
  }
  CHECK(any_different);
}

TEST_CASE("generated states are structurally sound") {
  std::set<std::size_t> universe_sizes;
  std::size_t abnormal = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    const EpistemicState s = random_state(params);
    universe_sizes.insert(s.universe().size());
    if (s.is_abnormal()) ++abnormal;
    // build() already validated; exercise the measure arithmetic on top.
    if (!s.is_abnormal()) {
      CHECK(s.popper_eval(s.total_support(), s.universe().full_prop()) == 1);
    }
  }
  CHECK(universe_sizes ==
        std::set<std::size_t>{2, 4, 8, 16});  // every allowed atom count
  CHECK(abnormal < 100);                      // rare but permitted
}

TEST_CASE("a zero non-entertainable fraction forces universal states") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    params.non_entertainable_fraction = Rational(0);
    const EpistemicState s = random_state(params);
    REQUIRE_FALSE(s.is_abnormal());
    CHECK(s.total_support() == s.universe().full_prop());
  }
}

TEST_CASE("parameter validation") {
  GeneratorParams params;
  params.max_atoms = 0;
  CHECK_THROWS_AS(random_state(params), ModelError);
  params = {};
  params.max_atoms = 17;
  CHECK_THROWS_AS(random_state(params), ModelError);
  params = {};
  params.max_ranks = 0;
  CHECK_THROWS_AS(random_state(params), ModelError);
  params = {};
  params.weight_denominator_bound = 0;
  CHECK_THROWS_AS(random_state(params), ModelError);
  params = {};
  params.non_entertainable_fraction = Rational(3, 2);
  CHECK_THROWS_AS(random_state(params), ModelError);
  params = {};
  params.non_entertainable_fraction = Rational(-1, 2);
  CHECK_THROWS_AS(random_state(params), ModelError);
}

TEST_CASE("the bundled fixture passes the full axiom battery") {
  const EpistemicState s = kennedy_model();
  AxiomCheckOptions options;
  options.core_oracle = true;
  options.table_pairs = 4;
  const AuditReport report =
      check_axioms(s, full_pool(s.universe()), options);
  CHECK(report.passed());
  CHECK(report.total_failures() == 0);
  CHECK(axiom(report, "Expansion").instances_checked == 16);
  CHECK(axiom(report, "Success").instances_checked == 16);
  CHECK(axiom(report, "Cumulativity").instances_checked == 16 * 16);
  CHECK(axiom(report, "Core Oracle").instances_checked == 1);
  CHECK(axiom(report, "Probabilistic Cumulativity").instances_checked == 4);
  // Not universal: the global laws must not have been asserted.
  CHECK(axiom(report, "Consistency Preservation").instances_checked == 0);
  CHECK(axiom(report, "Conjunctive Revision").instances_checked == 0);
}

TEST_CASE("the abnormal state is a fixpoint and nothing else applies") {
  const UniversePtr u = indexed_universe(2);
  const EpistemicState s = EpistemicState::abnormal(u);
  const AuditReport report = check_axioms(s, full_pool(*u));
  CHECK(report.passed());
  CHECK(axiom(report, "Fixity").instances_checked == 4);
  CHECK(axiom(report, "Preservation").instances_checked == 0);
  CHECK(axiom(report, "Success").instances_checked == 4);
}

TEST_CASE("random states pass the axiom battery") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    params.max_atoms = 3;
    const EpistemicState s = random_state(params);
    const AuditReport report = check_axioms(s, full_pool(s.universe()));
    CHECK(report.passed());
  }
}

TEST_CASE("coherence violations exist exactly outside universal states") {
  CHECK(find_cp_violation(kennedy_model()) ==
        kennedy_model().universe().singleton(3));
  CHECK_FALSE(find_cp_violation(coin_model(3)).has_value());
  CHECK_FALSE(
      find_cp_violation(EpistemicState::abnormal(indexed_universe(2)))
          .has_value());

  const UniversePtr u = indexed_universe(3);
  for_each_small_state(u, [&](const EpistemicState& s) {
    if (s.is_abnormal()) return;
    const bool universal = s.total_support() == u->full_prop();
    const auto witness = find_cp_violation(s);
    CHECK(universal == !witness.has_value());
    if (witness) {
      CHECK(suppose(s, *witness).is_abnormal());
      CHECK_FALSE(witness->empty());
    }
  });
}

TEST_CASE("exhaustive audits over tiny spaces pass and stay bounded") {
  const AuditReport tiny = exhaustive_small_space_audit(1);
  CHECK(tiny.passed());
  CHECK(tiny.instances_checked() > 0);

  const AuditReport report = exhaustive_small_space_audit(3);
  CHECK(report.passed());
  CHECK(axiom(report, "Core Oracle").instances_checked > 40);
  CHECK(axiom(report, "E3").instances_checked > 0);
  CHECK(axiom(report, "E4").instances_checked > 0);
  CHECK(axiom(report, "Consistency Preservation").instances_checked > 0);

  CHECK_THROWS_AS(exhaustive_small_space_audit(6), BoundError);
  CHECK_THROWS_AS(exhaustive_small_space_audit(0), BoundError);
}

TEST_CASE("axiom verdicts are invariant under within-rank reweighting") {
  // Shuffling the weights inside each rank moves the numbers but not the
  // support structure, so cores, suppositions, and verdicts must not move.
  GeneratorParams params;
  params.seed = 42;
  params.max_atoms = 3;
  params.max_ranks = 3;
  const EpistemicState s = random_state(params);
  REQUIRE_FALSE(s.is_abnormal());

  std::vector<RankMeasure> permuted;
  for (const auto& rank : s.ranks()) {
    std::vector<std::size_t> worlds;
    for (const auto& [w, weight] : rank.weights()) worlds.push_back(w);
    std::map<std::size_t, Rational> weights;
    for (std::size_t i = 0; i < worlds.size(); ++i) {
      weights[worlds[i]] = rank.weight_of(worlds[(i + 1) % worlds.size()]);
    }
    permuted.emplace_back(std::move(weights));
  }
  const EpistemicState t =
      EpistemicState::build(s.universe_ptr(), std::move(permuted));

  CHECK(cores_of(s) == cores_of(t));
  const auto pool = full_pool(s.universe());
  for (const auto& a : pool) {
    CHECK(suppose(s, a).total_support() == suppose(t, a).total_support());
    for (const auto& b : pool) {
      CHECK((s.popper_eval(b, a) == 1) == (t.popper_eval(b, a) == 1));
      CHECK((s.popper_eval(b, a) == 0) == (t.popper_eval(b, a) == 0));
    }
  }
  CHECK(check_axioms(t, pool).passed());
}

TEST_CASE("reports are deterministic, mergeable, and line-oriented") {
  const EpistemicState s = kennedy_model();
  const auto pool = full_pool(s.universe());
  const AuditReport once = check_axioms(s, pool);
  const AuditReport twice = check_axioms(s, pool);
  CHECK(once.to_lines() == twice.to_lines());
  CHECK(once.to_lines().size() == once.results.size());  // no failure lines

  AuditReport merged = once;
  merged.merge(twice);
  CHECK(merged.passed());
  CHECK(merged.instances_checked() == 2 * once.instances_checked());

  for (const auto& line : merged.to_lines()) {
    CHECK(line.find("axiom=") == 0);
    CHECK(line.find("status=pass") != std::string::npos);
  }
  CHECK(check_axioms(s, pool).to_text().find("pass") != std::string::npos);

  CHECK_THROWS_AS(check_axioms(s, {}), ModelError);
}

}  // TEST_SUITE
