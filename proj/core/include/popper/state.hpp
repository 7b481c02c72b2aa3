#pragma once

#include <map>
#include <optional>
#include <vector>

#include "popper/rational.hpp"
#include "popper/universe.hpp"

namespace popper {

// One layer of the ranked stack: an exact-rational probability measure given
// by its (strictly positive) weights per world. The support is the key set;
// weights sum to exactly 1. Rank index = position in the state's rank list.
class RankMeasure {
 public:
  explicit RankMeasure(std::map<std::size_t, Rational> weights)
      : weights_(std::move(weights)) {}

  const std::map<std::size_t, Rational>& weights() const { return weights_; }

  // Sum of weights over p's members (restricted to the support).
  Rational measure_of(const Prop& p) const;

  Rational weight_of(std::size_t world_index) const;

  std::size_t support_size() const { return weights_.size(); }

 private:
  std::map<std::size_t, Rational> weights_;
};

// A two-place (conditional-probability) function represented as a ranked
// stack of exact measures with pairwise-disjoint supports over a finite
// universe. An empty rank list is the abnormal state, the degenerate
// function assigning 1 to every event. Worlds in no support are the
// non-entertainable worlds.
//
// Immutable after construction; all queries are pure and safe to run
// concurrently. The nested core chain (cumulative support unions) is
// precomputed at build time.
class EpistemicState {
 public:
  // Validates all invariants: supports pairwise disjoint and inside the
  // universe, every weight positive, every rank summing to exactly 1.
  // An empty universe is rejected unless the rank list is empty too.
  // Throws ModelError, reporting the offending rank and exact sum.
  static EpistemicState build(UniversePtr universe,
                              std::vector<RankMeasure> ranks);

  // The coreless state assigning measure one to every event.
  static EpistemicState abnormal(UniversePtr universe);

  // One rank per occupied kappa value <= cutoff, in increasing kappa order,
  // uniform weights within each rank. Worlds with kappa above the cutoff, or
  // missing from the ranking, are non-entertainable. No cutoff = all ranks.
  // Throws ModelError for ranked worlds outside the universe.
  static EpistemicState from_ranking(
      UniversePtr universe, const std::map<std::string, unsigned>& kappa,
      std::optional<unsigned> cutoff = std::nullopt);

  bool is_abnormal() const { return ranks_.empty(); }
  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  const std::vector<RankMeasure>& ranks() const { return ranks_; }
  const Prop& support(std::size_t rank_index) const {
    return supports_[rank_index];
  }

  // P(b | a). Constantly 1 when this state is abnormal or a is abnormal;
  // otherwise mu_i(a & b) / mu_i(a) for the least rank i giving a positive
  // measure.
  Rational popper_eval(const Prop& b, const Prop& a) const;

  // Whether P(. | a) is a probability measure (some rank gives a positive
  // measure) rather than the constant-1 function.
  bool is_normal(const Prop& a) const;

  // P(a | x) = 1 for every x; equivalently the complement of a is abnormal.
  bool is_apriori(const Prop& a) const;

  // P(a | U).
  Rational unconditional(const Prop& a) const;

  // Cumulative support unions, innermost first; empty for the abnormal state.
  const std::vector<Prop>& core_chain() const { return cores_; }

  // Union of all supports (outermost core); the empty prop when abnormal.
  const Prop& total_support() const { return total_support_; }

  // Rank-for-rank, weight-for-weight equality over same-size universes.
  bool operator==(const EpistemicState& other) const;
  bool operator!=(const EpistemicState& other) const {
    return !(*this == other);
  }

 private:
  EpistemicState(UniversePtr universe, std::vector<RankMeasure> ranks,
                 std::vector<Prop> supports);

  UniversePtr universe_;
  std::vector<RankMeasure> ranks_;
  std::vector<Prop> supports_;     // per-rank support masks
  std::vector<Prop> cores_;        // cumulative unions of supports_
  Prop total_support_;
};

}  // namespace popper
