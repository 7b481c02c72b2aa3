#include "popper/cores.hpp"

#include <algorithm>

namespace popper {

namespace {

Prop prop_from_mask(unsigned long long mask, std::size_t n) {
  Prop p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (mask & (1ULL << i)) {
      p.add(i);
    }
  }
  return p;
}

}  // namespace

CoreSystem cores_of(const EpistemicState& state) {
  return CoreSystem{state.core_chain()};
}

Prop innermost(const EpistemicState& state) {
  if (state.is_abnormal()) {
    return Prop(state.universe().size());
  }
  return state.core_chain().front();
}

Prop outermost(const EpistemicState& state) {
  if (state.is_abnormal()) {
    return Prop(state.universe().size());
  }
  return state.core_chain().back();
}

bool expects(const EpistemicState& state, const Formula& f) {
  const Prop inner = innermost(state);
  return !inner.empty() && inner.is_subset_of(extension(f, state.universe()));
}

bool fully_believes(const EpistemicState& state, const Formula& f) {
  const Prop outer = outermost(state);
  return !outer.empty() && outer.is_subset_of(extension(f, state.universe()));
}

bool is_core_bruteforce(const EpistemicState& state, const Prop& k,
                        std::size_t max_worlds) {
  const std::size_t n = state.universe().size();
  if (n > max_worlds || n > 63) {
    throw BoundError("universe of " + std::to_string(n) +
                     " worlds exceeds the brute-force bound of " +
                     std::to_string(max_worlds));
  }
  if (!state.is_normal(k)) {
    return false;
  }
  const unsigned long long k_mask = k.mask();
  const unsigned long long outside_mask = (~k).mask();
  // Every nonempty a inside k, every b outside (including the empty b, which
  // catches abnormal subsets of the candidate: P(EMPTY | a) must be 0).
  for (unsigned long long a = k_mask; a != 0; a = (a - 1) & k_mask) {
    const Prop pa = prop_from_mask(a, n);
    unsigned long long b = outside_mask;
    while (true) {
      const Prop pb = prop_from_mask(b, n);
      if (state.popper_eval(pb, pa | pb) != 0) {
        return false;
      }
      if (b == 0) break;
      b = (b - 1) & outside_mask;
    }
  }
  return true;
}

CoreSystem cores_bruteforce(const EpistemicState& state,
                            std::size_t max_worlds) {
  const std::size_t n = state.universe().size();
  if (n > max_worlds || n > 63) {
    throw BoundError("universe of " + std::to_string(n) +
                     " worlds exceeds the brute-force bound of " +
                     std::to_string(max_worlds));
  }
  std::vector<Prop> found;
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    Prop candidate = prop_from_mask(mask, n);
    if (is_core_bruteforce(state, candidate, max_worlds)) {
      found.push_back(std::move(candidate));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Prop& x, const Prop& y) { return x.count() < y.count(); });
  return CoreSystem{std::move(found)};
}

}  // namespace popper
