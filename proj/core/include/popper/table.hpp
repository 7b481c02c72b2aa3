#pragma once

#include "popper/state.hpp"

namespace popper {

inline constexpr std::size_t kDefaultTableBound = 8;

// Explicit two-place conditional table over a finite universe: one exact
// rational entry P(B|A) for every pair of subsets. Exponential in the
// universe size, so construction is bounded.
//
// A valid table satisfies, for every antecedent A:
//   - either P(.|A) is constantly 1 (A abnormal), or it is a probability
//     measure: nonnegative, P(EMPTY|A)=0, P(U|A)=1, additive (equivalently,
//     determined by its singleton values);
//   - the empty antecedent is abnormal;
// and the multiplication axiom P(B&C|A) = P(B|A) * P(C|B&A) for all triples.
class ConditionalTable {
 public:
  // Builds the table of a state by evaluating every pair.
  // Throws BoundError when the universe exceeds max_worlds.
  static ConditionalTable of_state(const EpistemicState& state,
                                   std::size_t max_worlds = kDefaultTableBound);

  // Builds from raw entries indexed by entry_index(); validates fully.
  // Throws ModelError citing the violated axiom instance.
  static ConditionalTable from_entries(UniversePtr universe,
                                       std::vector<Rational> entries);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  std::size_t universe_size() const { return n_; }

  // Entries are indexed by (A_mask << n) | B_mask over world-index masks.
  std::size_t entry_index(unsigned long long b_mask,
                          unsigned long long a_mask) const {
    return static_cast<std::size_t>((a_mask << n_) | b_mask);
  }

  const Rational& at(unsigned long long b_mask, unsigned long long a_mask) const {
    return entries_[entry_index(b_mask, a_mask)];
  }
  const Rational& at(const Prop& b, const Prop& a) const {
    return at(b.mask(), a.mask());
  }

  bool operator==(const ConditionalTable& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }

  // Full axiom validation; throws ModelError citing the violated instance
  // (antecedent/event masks rendered as world sets).
  void validate() const;

 private:
  ConditionalTable(UniversePtr universe, std::vector<Rational> entries);

  UniversePtr universe_;
  std::size_t n_;
  std::vector<Rational> entries_;
};

// Table of popper_eval over all pairs. Throws BoundError past max_worlds.
ConditionalTable to_conditional_table(const EpistemicState& state,
                                      std::size_t max_worlds = kDefaultTableBound);

// Inverse direction: rebuild the ranked state whose table equals the input.
// Heavy points of P(.|U) form rank 0; the construction recurses on the
// remaining worlds under the table conditioned on their union; worlds left
// when the remainder goes abnormal are non-entertainable.
// Validates the table first; throws ModelError citing any violated axiom.
EpistemicState from_conditional_table(const ConditionalTable& table);

}  // namespace popper
