#pragma once

#include <optional>

#include "popper/cores.hpp"
#include "popper/state.hpp"

namespace popper {

// Hypothetical revision: map a state P and proposition A to P^A.
//
// When the state is abnormal, or A misses the outermost core, the result is
// the abnormal state (incoherence is a value, never an exception). Otherwise
// each rank giving A positive measure is conditioned on A (support
// intersected, weights renormalized) and the surviving ranks are renumbered
// consecutively. The universe is unchanged: non-entertainable worlds stay
// members of it.
EpistemicState suppose(const EpistemicState& state, const Prop& a);

// A supposed proposition is entertainable iff it overlaps the outermost core;
// supposing anything else yields the abnormal state.
bool entertainable(const EpistemicState& state, const Prop& a);

struct SuppositionStep {
  Prop supposed;
  std::optional<Formula> source_formula;
  EpistemicState result;
};

// Ordered record of the states produced by a sequence of suppositions.
// Once a step's result is abnormal every later result is abnormal.
struct SuppositionTrace {
  EpistemicState initial;
  std::vector<SuppositionStep> steps;

  const EpistemicState& final_state() const {
    return steps.empty() ? initial : steps.back().result;
  }
};

SuppositionTrace suppose_seq(const EpistemicState& state,
                             const std::vector<Prop>& inputs);

// Formula-level convenience; records each source formula in the trace.
SuppositionTrace suppose_seq(const EpistemicState& state,
                             const std::vector<Formula>& inputs);

struct ConditionalVerdict {
  bool accepted;
  bool coherent;
};

// Ramsey-style acceptance: suppose the antecedent, ask whether the resulting
// expectations entail the consequent. A non-entertainable antecedent makes
// the conditional vacuously accepted but flagged incoherent.
ConditionalVerdict accepts_conditional(const EpistemicState& state,
                                       const Formula& antecedent,
                                       const Formula& consequent);

}  // namespace popper
