// Acceptance harness: every release gate in one binary. Each criterion is a
// self-timed workload with a wall-clock budget; the run prints one PASS/FAIL
// line per criterion and exits with the number of failures. Pass a criterion
// number to run just that one.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "popper/audit.hpp"
#include "popper/cores.hpp"
#include "popper/examples.hpp"
#include "popper/model_io.hpp"
#include "popper/nmr.hpp"
#include "popper/supposition.hpp"
#include "popper/table.hpp"

using namespace popper;

namespace {

void req(bool condition, const std::string& what) {
  if (!condition) throw std::runtime_error(what);
}

Formula pf(const std::string& text) { return parse_formula(text); }

// Minterm formula picking out one world of a universe with pairwise-distinct
// valuations.
Formula minterm(const Universe& u, std::size_t world) {
  Formula f = Formula::constant(true);
  bool first = true;
  for (const auto& atom : u.atoms()) {
    Formula lit = Formula::atom(atom);
    if (!u.worlds()[world].valuation.at(atom)) lit = Formula::negation(lit);
    f = first ? lit : Formula::conjunction(f, lit);
    first = false;
  }
  return f;
}

// Canonical DNF whose models are exactly the worlds in `mask`.
Formula formula_for_mask(const Universe& u, unsigned long long mask) {
  Formula f = Formula::constant(false);
  bool first = true;
  for (std::size_t w = 0; w < u.size(); ++w) {
    if (!(mask >> w & 1u)) continue;
    Formula m = minterm(u, w);
    f = first ? m : Formula::disjunction(f, m);
    first = false;
  }
  return f;
}

// Random ranked structure over an arbitrary universe, for sizes the
// power-of-two generator cannot produce.
EpistemicState random_structure(const UniversePtr& u, std::mt19937_64& rng) {
  const std::size_t n = u->size();
  std::vector<std::size_t> worlds;
  for (std::size_t w = 0; w < n; ++w) {
    if (rng() % 5 != 0) worlds.push_back(w);  // ~1 in 5 non-entertainable
  }
  if (worlds.empty()) worlds.push_back(rng() % n);
  std::shuffle(worlds.begin(), worlds.end(), rng);

  const std::size_t rank_count =
      1 + rng() % std::min<std::size_t>(worlds.size(), 4);
  std::vector<std::vector<std::size_t>> members(rank_count);
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    members[i < rank_count ? i : rng() % rank_count].push_back(worlds[i]);
  }

  std::vector<RankMeasure> ranks;
  for (const auto& block : members) {
    std::vector<unsigned> raw;
    unsigned total = 0;
    for (std::size_t i = 0; i < block.size(); ++i) {
      raw.push_back(1 + rng() % 9);
      total += raw.back();
    }
    std::map<std::size_t, Rational> weights;
    for (std::size_t i = 0; i < block.size(); ++i) {
      weights[block[i]] = Rational(raw[i], total);
    }
    ranks.emplace_back(std::move(weights));
  }
  return EpistemicState::build(u, std::move(ranks));
}

std::vector<Prop> sampled_pool(std::size_t universe_size, std::mt19937_64& rng,
                               unsigned count) {
  const unsigned long long full = (1ull << universe_size) - 1;
  std::vector<Prop> pool;
  for (unsigned i = 0; i < count; ++i) {
    pool.push_back(prop_from_mask(universe_size, rng() & full));
  }
  return pool;
}

const AxiomResult& named_axiom(const AuditReport& report,
                               const std::string& name) {
  for (const auto& r : report.results) {
    if (r.name == name) return r;
  }
  throw std::runtime_error("report lacks axiom " + name);
}

// ---------------------------------------------------------------------------

// Fixed verdicts of the bundled kennedy fixture.
void criterion_1() {
  const EpistemicState s = kennedy_model();
  const auto claim = accepts_conditional(s, pf("~O"), pf("S"));
  req(claim.accepted && claim.coherent, "~O => S must be accepted, coherent");
  const auto converse = accepts_conditional(s, pf("S"), pf("~O"));
  req(converse.accepted && converse.coherent,
      "S => ~O must be accepted, coherent");
  for (const char* anything : {"F", "O", "T", "J"}) {
    const auto v = accepts_conditional(s, pf("~O & ~S"), pf(anything));
    req(v.accepted && !v.coherent,
        "~O & ~S => " + std::string(anything) + " must be incoherent");
  }
  req(expects(s, pf("O & ~S")), "must expect O & ~S");
  req(fully_believes(s, pf("S | O")), "must fully believe S | O");
  req(!fully_believes(s, pf("O")), "must not fully believe O");
}

// The coin fixture keeps exactly two cores at every truncation depth.
void criterion_2() {
  for (unsigned n = 1; n <= 16; ++n) {
    const EpistemicState s = coin_model(n);
    const Universe& u = s.universe();
    const std::size_t omega = u.size() - 1;
    req(u.world(omega).id == "omega", "last world must be omega");

    const CoreSystem cores = cores_of(s);
    req(cores.cores.size() == 2, "coin must have exactly two cores");
    const Prop finite = u.full_prop() - u.singleton(omega);
    req(cores.cores[0] == finite, "innermost core must exclude omega");
    req(cores.cores[1] == u.full_prop(), "outermost core must be everything");

    req(s.unconditional(u.singleton(omega)) == 0, "pr({omega}) must be 0");
    req(expects(s, pf("~inf")), "must expect a finite run");
    req(!fully_believes(s, pf("~inf")), "must not fully believe finiteness");
  }
}

// Ranked-core extraction agrees with the brute-force superiority check.
void criterion_3() {
  std::size_t states = 0;
  for (unsigned worlds = 1; worlds <= 5; ++worlds) {
    const UniversePtr u = indexed_universe(worlds);
    for_each_small_state(u, [&](const EpistemicState& s) {
      ++states;
      req(cores_of(s) == cores_bruteforce(s),
          "core mismatch on enumerated state");
    });
  }
  req(states > 2000, "enumeration unexpectedly small");

  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    params.max_atoms = 3;  // universes of 2, 4, or 8 worlds
    const EpistemicState s = random_state(params);
    req(cores_of(s) == cores_bruteforce(s),
        "core mismatch on generated state, seed " + std::to_string(seed));
  }
}

// The full supposition-law battery on exhaustive and generated states.
void criterion_4() {
  const AuditReport exhaustive = exhaustive_small_space_audit(4);
  req(exhaustive.passed(), "exhaustive audit failed:\n" + exhaustive.to_text());
  for (const char* name :
       {"Expansion", "Success", "Preservation",
        "Restricted Consistency Preservation", "Fixity", "Cumulativity",
        "Global Success", "E1", "E2", "E3", "E4", "Core Dynamics"}) {
    const AxiomResult& r = named_axiom(exhaustive, name);
    req(r.instances_checked > 0, std::string(name) + " never instantiated");
    req(r.passed(), std::string(name) + " failed");
  }

  AuditReport generated;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    const EpistemicState s = random_state(params);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    generated.merge(
        check_axioms(s, sampled_pool(s.universe().size(), rng, 32)));
  }
  req(generated.passed(),
      "generated-state audit failed:\n" + generated.to_text());
}

// Global laws of the universal+consistent regime, plus the witness finder.
void criterion_5() {
  const EpistemicState kennedy = kennedy_model();
  const auto witness = find_cp_violation(kennedy);
  req(witness.has_value(), "fixture must admit a coherence violation");
  req(*witness == kennedy.universe().singleton(3),
      "witness must be the non-entertainable world");
  req(suppose(kennedy, *witness).is_abnormal(), "witness must incohere");

  AuditReport merged;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    params.non_entertainable_fraction = Rational(0);
    const EpistemicState s = random_state(params);
    req(!find_cp_violation(s).has_value(),
        "universal state has no violation, seed " + std::to_string(seed));
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 2);
    merged.merge(check_axioms(s, sampled_pool(s.universe().size(), rng, 12)));
  }
  req(merged.passed(), "universal-regime audit failed:\n" + merged.to_text());
  req(named_axiom(merged, "Consistency Preservation").instances_checked > 0,
      "Consistency Preservation never instantiated");
  req(named_axiom(merged, "Conjunctive Revision").instances_checked > 0,
      "Conjunctive Revision never instantiated");
}

// The probability-one route and the core route define the same consequence
// relation, and the rational postulates hold in the universal regime.
void criterion_6() {
  // Route equivalence over every pair of inequivalent formulas on three
  // atoms (256 extensions), across a spread of generated states.
  std::vector<EpistemicState> models;
  for (std::uint64_t seed = 0; models.size() < 25 && seed < 4000; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    params.max_atoms = 3;
    EpistemicState s = random_state(params);
    if (!s.is_abnormal() && s.universe().size() == 8) {
      models.push_back(std::move(s));
    }
  }
  req(models.size() == 25, "could not collect 3-atom models");

  std::vector<Formula> formulas;
  for (unsigned m = 0; m < 256; ++m) {
    formulas.push_back(formula_for_mask(models.front().universe(), m));
  }
  for (const EpistemicState& s : models) {
    for (unsigned a = 0; a < 256; ++a) {
      for (unsigned b = 0; b < 256; ++b) {
        if (nm_follows(s, formulas[a], formulas[b]) !=
            nm_follows_via_cores(s, formulas[a], formulas[b])) {
          req(false, "routes disagree at a=" + std::to_string(a) +
                         " b=" + std::to_string(b));
        }
      }
    }
  }

  // Rational postulates over pools of at least 20 inequivalent formulas.
  std::size_t audited = 0;
  for (std::uint64_t seed = 0; audited < 100 && seed < 4000; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    params.non_entertainable_fraction = Rational(0);
    const EpistemicState s = random_state(params);
    const std::size_t n = s.universe().size();
    if (n < 8) continue;  // need 20+ inequivalent formulas
    ++audited;

    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 3);
    std::set<unsigned long long> masks;
    while (masks.size() < 24) masks.insert(rng() & ((1ull << n) - 1));
    std::vector<Formula> pool;
    for (const auto mask : masks) {
      pool.push_back(formula_for_mask(s.universe(), mask));
    }

    const RationalAuditReport report = rational_audit(s, pool);
    req(report.universal && report.consistent,
        "state must be universal and consistent");
    req(report.passed(), "postulates failed:\n" + report.to_text());
    for (const auto& p : report.postulates) {
      req(!p.conditional_only, p.name + " should run unrestricted");
    }
    bool reflexivity_wide = false;
    for (const auto& p : report.postulates) {
      if (p.name == "Reflexivity") {
        reflexivity_wide = p.instances_checked >= 20;
      }
    }
    req(reflexivity_wide, "pool must hold 20+ inequivalent formulas");
  }
  req(audited == 100, "could not collect universal states");
}

// Tabulating a state and rebuilding from the table is the identity, and
// every emitted table passes full validation.
void criterion_7() {
  for (unsigned worlds = 1; worlds <= 4; ++worlds) {
    for_each_small_state(indexed_universe(worlds),
                         [&](const EpistemicState& s) {
                           const ConditionalTable t = to_conditional_table(s);
                           t.validate();
                           req(from_conditional_table(t) == s,
                               "round trip moved an enumerated state");
                         });
  }
  std::mt19937_64 rng(775);
  for (unsigned worlds = 5; worlds <= 6; ++worlds) {
    const UniversePtr u = indexed_universe(worlds);
    const unsigned samples = worlds == 5 ? 60 : 40;
    for (unsigned i = 0; i < samples; ++i) {
      const EpistemicState s = random_structure(u, rng);
      const ConditionalTable t = to_conditional_table(s);
      t.validate();
      req(from_conditional_table(t) == s, "round trip moved a sampled state");
    }
  }
}

// Iterated supposition matches one-shot supposition of the conjunction,
// table entry for table entry.
void criterion_8() {
  const auto tables_match = [](const EpistemicState& s, const Prop& a,
                               const Prop& b) {
    const EpistemicState twice = suppose(suppose(s, a), b);
    const EpistemicState once = suppose(s, a & b);
    return to_conditional_table(twice, 6) == to_conditional_table(once, 6);
  };

  for (unsigned worlds = 1; worlds <= 3; ++worlds) {
    const UniversePtr u = indexed_universe(worlds);
    const unsigned long long subsets = 1ull << worlds;
    for_each_small_state(u, [&](const EpistemicState& s) {
      for (unsigned long long a = 0; a < subsets; ++a) {
        for (unsigned long long b = 0; b < subsets; ++b) {
          req(tables_match(s, prop_from_mask(worlds, a),
                           prop_from_mask(worlds, b)),
              "table mismatch on enumerated state");
        }
      }
    });
  }

  std::mt19937_64 rng(881);
  for (unsigned worlds = 4; worlds <= 5; ++worlds) {
    const UniversePtr u = indexed_universe(worlds);
    const unsigned long long full = (1ull << worlds) - 1;
    for (unsigned i = 0; i < 30; ++i) {
      const EpistemicState s = random_structure(u, rng);
      for (unsigned pair = 0; pair < 12; ++pair) {
        req(tables_match(s, prop_from_mask(worlds, rng() & full),
                         prop_from_mask(worlds, rng() & full)),
            "table mismatch on sampled state");
      }
    }
  }
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  void (*run)();
};

const Criterion kCriteria[] = {
    {1, "fixture verdicts", 1.0, criterion_1},
    {2, "coin core structure", 1.0, criterion_2},
    {3, "core extraction vs brute force", 60.0, criterion_3},
    {4, "supposition axiom battery", 120.0, criterion_4},
    {5, "universal-regime laws", 30.0, criterion_5},
    {6, "consequence routes and postulates", 120.0, criterion_6},
    {7, "conditional-table round trip", 60.0, criterion_7},
    {8, "iterated-supposition tables", 60.0, criterion_8},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion 1-8]\n", argv[0]);
    return 2;
  }
  if (argc == 2) {
    try {
      selected = std::stoi(argv[1]);
    } catch (const std::exception&) {
      selected = 0;
    }
    if (selected < 1 || selected > 8) {
      std::fprintf(stderr, "usage: %s [criterion 1-8]\n", argv[0]);
      return 2;
    }
  }

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (selected != 0 && c.number != selected) continue;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    try {
      c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && elapsed >= c.budget_seconds) {
      ok = false;
      detail = "over budget";
    }
    std::printf("criterion %d: %s %s (%.2fs, budget %gs)\n", c.number,
                ok ? "PASS" : "FAIL", c.name, elapsed, c.budget_seconds);
    if (!ok) {
      ++failures;
      if (!detail.empty()) std::printf("  %s\n", detail.c_str());
    }
    std::fflush(stdout);
  }
  return failures;
}
