#include "popper/state.hpp"

#include <algorithm>

namespace popper {

Rational RankMeasure::measure_of(const Prop& p) const {
  Rational sum = 0;
  for (const auto& [world, weight] : weights_) {
    if (p.contains(world)) {
      sum += weight;
    }
  }
  return sum;
}

Rational RankMeasure::weight_of(std::size_t world_index) const {
  auto it = weights_.find(world_index);
  return it == weights_.end() ? Rational(0) : it->second;
}

EpistemicState::EpistemicState(UniversePtr universe,
                               std::vector<RankMeasure> ranks,
                               std::vector<Prop> supports)
    : universe_(std::move(universe)),
      ranks_(std::move(ranks)),
      supports_(std::move(supports)),
      total_support_(universe_->size()) {
  cores_.reserve(ranks_.size());
  for (const auto& s : supports_) {
    total_support_ = total_support_ | s;
    cores_.push_back(total_support_);
  }
}

EpistemicState EpistemicState::build(UniversePtr universe,
                                     std::vector<RankMeasure> ranks) {
  if (!universe) {
    throw ModelError("null universe");
  }
  if (universe->size() == 0 && !ranks.empty()) {
    throw ModelError("empty universe admits only the abnormal state");
  }
  const std::size_t n = universe->size();
  Prop claimed(n);
  std::vector<Prop> supports;
  supports.reserve(ranks.size());
  for (std::size_t r = 0; r < ranks.size(); ++r) {
    const auto& weights = ranks[r].weights();
    if (weights.empty()) {
      throw ModelError("rank " + std::to_string(r) + " has empty support");
    }
    Prop support(n);
    Rational sum = 0;
    for (const auto& [world, weight] : weights) {
      if (world >= n) {
        throw ModelError("rank " + std::to_string(r) +
                         " references world index " + std::to_string(world) +
                         " outside the universe");
      }
      if (weight <= 0) {
        throw ModelError("rank " + std::to_string(r) + " gives world '" +
                         universe->world(world).id +
                         "' non-positive weight " + format_rational(weight));
      }
      if (claimed.contains(world)) {
        throw ModelError("world '" + universe->world(world).id +
                         "' appears in two rank supports (second is rank " +
                         std::to_string(r) + ")");
      }
      support.add(world);
      sum += weight;
    }
    if (sum != 1) {
      throw ModelError("rank " + std::to_string(r) + " weights sum to " +
                       format_rational(sum) + ", expected 1");
    }
    claimed = claimed | support;
    supports.push_back(std::move(support));
  }
  return EpistemicState(std::move(universe), std::move(ranks),
                        std::move(supports));
}

EpistemicState EpistemicState::abnormal(UniversePtr universe) {
  if (!universe) {
    throw ModelError("null universe");
  }
  return EpistemicState(std::move(universe), {}, {});
}

EpistemicState EpistemicState::from_ranking(
    UniversePtr universe, const std::map<std::string, unsigned>& kappa,
    std::optional<unsigned> cutoff) {
  if (!universe) {
    throw ModelError("null universe");
  }
  // Group worlds by kappa value; std::map iteration gives increasing order.
  std::map<unsigned, std::vector<std::size_t>> layers;
  for (const auto& [id, k] : kappa) {
    const std::size_t index = universe->index_of(id);
    if (cutoff && k > *cutoff) {
      continue;  // non-entertainable
    }
    layers[k].push_back(index);
  }
  std::vector<RankMeasure> ranks;
  ranks.reserve(layers.size());
  for (const auto& [k, worlds] : layers) {
    std::map<std::size_t, Rational> weights;
    const Rational uniform(1, worlds.size());
    for (std::size_t w : worlds) {
      weights.emplace(w, uniform);
    }
    ranks.emplace_back(std::move(weights));
  }
  return build(std::move(universe), std::move(ranks));
}

Rational EpistemicState::popper_eval(const Prop& b, const Prop& a) const {
  if (is_abnormal()) {
    return 1;
  }
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (!supports_[i].intersects(a)) {
      continue;  // mu_i(a) = 0: weights are strictly positive
    }
    const Prop hit = supports_[i] & a;
    const Prop hit_b = hit & b;
    // Exact shortcuts: the measure of the empty set is 0, and numerator ==
    // denominator whenever the same weight set is summed on both sides.
    if (hit_b.empty()) {
      return 0;
    }
    if (hit_b == hit) {
      return 1;
    }
    return ranks_[i].measure_of(hit_b) / ranks_[i].measure_of(hit);
  }
  return 1;  // a is abnormal
}

bool EpistemicState::is_normal(const Prop& a) const {
  return !is_abnormal() && total_support_.intersects(a);
}

bool EpistemicState::is_apriori(const Prop& a) const {
  return !is_normal(universe_->full_prop() - a);
}

Rational EpistemicState::unconditional(const Prop& a) const {
  return popper_eval(a, universe_->full_prop());
}

bool EpistemicState::operator==(const EpistemicState& other) const {
  if (universe_->size() != other.universe_->size()) return false;
  if (ranks_.size() != other.ranks_.size()) return false;
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i].weights() != other.ranks_[i].weights()) return false;
  }
  return true;
}

}  // namespace popper
