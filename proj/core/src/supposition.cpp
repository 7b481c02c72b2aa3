#include "popper/supposition.hpp"

namespace popper {

EpistemicState suppose(const EpistemicState& state, const Prop& a) {
  if (state.is_abnormal() || !state.total_support().intersects(a)) {
    return EpistemicState::abnormal(state.universe_ptr());
  }
  std::vector<RankMeasure> conditioned;
  for (std::size_t i = 0; i < state.ranks().size(); ++i) {
    if (!state.support(i).intersects(a)) {
      continue;  // this rank gives a measure zero and drops out
    }
    const RankMeasure& rank = state.ranks()[i];
    const Rational total = rank.measure_of(a);
    std::map<std::size_t, Rational> weights;
    for (const auto& [world, weight] : rank.weights()) {
      if (a.contains(world)) {
        weights.emplace(world, weight / total);
      }
    }
    conditioned.emplace_back(std::move(weights));
  }
  return EpistemicState::build(state.universe_ptr(), std::move(conditioned));
}

bool entertainable(const EpistemicState& state, const Prop& a) {
  return state.total_support().intersects(a);
}

SuppositionTrace suppose_seq(const EpistemicState& state,
                             const std::vector<Prop>& inputs) {
  SuppositionTrace trace{state, {}};
  const EpistemicState* current = &trace.initial;
  for (const Prop& a : inputs) {
    trace.steps.push_back({a, std::nullopt, suppose(*current, a)});
    current = &trace.steps.back().result;
  }
  return trace;
}

SuppositionTrace suppose_seq(const EpistemicState& state,
                             const std::vector<Formula>& inputs) {
  SuppositionTrace trace{state, {}};
  const EpistemicState* current = &trace.initial;
  for (const Formula& f : inputs) {
    Prop a = extension(f, state.universe());
    trace.steps.push_back({a, f, suppose(*current, a)});
    current = &trace.steps.back().result;
  }
  return trace;
}

ConditionalVerdict accepts_conditional(const EpistemicState& state,
                                       const Formula& antecedent,
                                       const Formula& consequent) {
  const EpistemicState revised =
      suppose(state, extension(antecedent, state.universe()));
  const bool coherent = !revised.is_abnormal();
  const bool accepted =
      innermost(revised).is_subset_of(extension(consequent, state.universe()));
  return {accepted, coherent};
}

}  // namespace popper
