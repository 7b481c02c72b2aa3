#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "popper/state.hpp"

namespace popper {

// Knobs for the deterministic random-model generator. The same params always
// produce the same state.
struct GeneratorParams {
  std::uint64_t seed = 0;
  unsigned max_atoms = 4;
  unsigned max_ranks = 4;
  // Chance for each world to end up outside every rank. Zero forces
  // universal states (outermost core = universe).
  Rational non_entertainable_fraction = Rational(1, 4);
  // Per-rank weights are drawn as integers in [1, bound] and normalized.
  unsigned weight_denominator_bound = 16;
};

// One failed axiom instance, carrying everything needed to replay it: the
// state in the model file format plus the inputs and the disagreeing sides.
struct AxiomFailure {
  std::string state_model;
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct AxiomResult {
  std::string name;
  std::size_t instances_checked = 0;
  std::vector<AxiomFailure> failures;

  bool passed() const { return failures.empty(); }
};

struct AuditReport {
  std::vector<AxiomResult> results;

  bool passed() const;
  std::size_t instances_checked() const;
  std::size_t total_failures() const;

  // Sums instance counts and concatenates failures, matching by axiom name.
  void merge(const AuditReport& other);

  std::string to_text() const;
  // One line per axiom (and per failure), newlines escaped, for CI diffing.
  std::vector<std::string> to_lines() const;
};

// Deterministic in params.seed. The universe is every valuation over the
// chosen atoms; each world may be left non-entertainable per the fraction;
// the rest are partitioned into ranks with random normalized weights. May
// return the abnormal state if no world stays entertainable.
// Throws ModelError for out-of-range params.
EpistemicState random_state(const GeneratorParams& params);

struct AxiomCheckOptions {
  // Also cross-check the state against the brute-force core oracle.
  bool core_oracle = false;
  // When positive and the universe is small enough, compare full conditional
  // tables for that many supposition pairs (the probabilistic form of
  // Cumulativity). Expensive: 4^worlds entries per table.
  std::size_t table_pairs = 0;
  unsigned table_world_bound = 6;
};

// Mechanically verifies every supposition/core law against one state:
// Expansion, Success, Preservation, Restricted Consistency Preservation,
// Fixity, E1-E4 and Core Dynamics over every pool member, Cumulativity and
// Global Success over every ordered pool pair, plus Consistency Preservation
// and Conjunctive Revision when the state is universal and consistent.
// Exact comparisons; failures carry replayable counterexamples.
AuditReport check_axioms(const EpistemicState& state,
                         const std::vector<Prop>& proposition_pool,
                         const AxiomCheckOptions& options = {});

// A nonempty proposition whose supposition lands a consistent state in
// incoherence (possible exactly when some world lies outside the outermost
// core), or nullopt when none exists.
std::optional<Prop> find_cp_violation(const EpistemicState& state);

// Enumerates every ranked state over universes of 1..max_worlds worlds
// (every non-entertainable set, every ordered rank partition, a small grid
// of exact weights per rank), then runs check_axioms with the full powerset
// as pool and the core oracle enabled. max_worlds > 5 is rejected: the
// regime is exponential three times over.
AuditReport exhaustive_small_space_audit(unsigned max_worlds);

// A universe of exactly world_count worlds w0, w1, ... whose valuations
// spell the index in binary, so ids and truth assignments line up across
// runs. Enumeration and generator universes both use this shape.
UniversePtr indexed_universe(unsigned world_count);

// The subset of the first universe_size worlds selected by mask bit i.
Prop prop_from_mask(std::size_t universe_size, unsigned long long mask);

// Visits every ranked state over the universe: the abnormal state, then for
// each nonempty entertainable subset every ordered rank partition, uniformly
// weighted plus one skewed variant whenever some rank has two or three
// members. This is the state enumeration behind exhaustive_small_space_audit.
void for_each_small_state(
    const UniversePtr& universe,
    const std::function<void(const EpistemicState&)>& visit);

}  // namespace popper
