#pragma once

#include "popper/state.hpp"

namespace popper {

// The finite nested chain of probability cores of a state, innermost first.
// Strictly increasing under set inclusion; empty for the abnormal state.
struct CoreSystem {
  std::vector<Prop> cores;

  bool operator==(const CoreSystem& other) const {
    return cores == other.cores;
  }
};

inline constexpr std::size_t kDefaultBruteforceBound = 10;

// The cumulative support unions of the ranked stack, innermost first.
CoreSystem cores_of(const EpistemicState& state);

// Smallest core: the heavy points carrying unconditional positive measure.
// The empty prop for the abnormal state.
Prop innermost(const EpistemicState& state);

// Largest core: the factual constraints; its complement is the
// non-entertainable region. The empty prop for the abnormal state.
Prop outermost(const EpistemicState& state);

// The innermost core is nonempty and entails f.
bool expects(const EpistemicState& state, const Formula& f);

// The outermost core is nonempty and entails f.
bool fully_believes(const EpistemicState& state, const Formula& f);

// Direct strong-superiority check by enumeration: k is normal, and
// P(b | a+b) = 0 for every nonempty a inside k and every b disjoint from k.
// Independent of the ranked core chain; intended as its oracle.
// Throws BoundError when the universe exceeds max_worlds.
bool is_core_bruteforce(const EpistemicState& state, const Prop& k,
                        std::size_t max_worlds = kDefaultBruteforceBound);

// All subsets passing is_core_bruteforce, sorted by size.
// Throws BoundError when the universe exceeds max_worlds.
CoreSystem cores_bruteforce(const EpistemicState& state,
                            std::size_t max_worlds = kDefaultBruteforceBound);

}  // namespace popper
