#pragma once

#include <string>

#include "popper/supposition.hpp"

namespace popper {

// Nonmonotonic consequence A |~ B over a state: P(B|A) = 1.
// Throws UnknownAtomError for undeclared atoms. The state must not be
// abnormal (every query would be vacuously true there).
bool nm_follows(const EpistemicState& state, const Formula& premise,
                const Formula& conclusion);

// The equivalent core route: the expectations after supposing the premise
// entail the conclusion (an abnormal result entails everything).
bool nm_follows_via_cores(const EpistemicState& state, const Formula& premise,
                          const Formula& conclusion);

struct PostulateResult {
  std::string name;
  std::size_t instances_checked = 0;
  // One human-readable line per failing instantiation.
  std::vector<std::string> failures;
  // True when the state is not universal+consistent and the postulate was
  // audited only on the entertainable-antecedent fragment.
  bool conditional_only = false;

  bool passed() const { return failures.empty(); }
};

struct RationalAuditReport {
  // True when the audited state is universal (outermost core = U) and
  // consistent (nonempty innermost core), the regime where the full
  // postulate set is expected to hold.
  bool universal = false;
  bool consistent = false;
  std::vector<PostulateResult> postulates;

  bool passed() const;
  std::size_t total_failures() const;
  // Structured text: one postulate per line plus failure detail.
  std::string to_text() const;
};

// Audits the rational-consequence postulates (Reflexivity, Left Logical
// Equivalence, Right Weakening, And, Or, Cautious Monotonicity, Rational
// Monotonicity, and Consistency Preservation) over every instantiation drawn
// from the pool. The pool is deduplicated up to logical equivalence
// (extension equality) first. On non-universal or inconsistent states the
// consistency-dependent checks are restricted to entertainable antecedents
// and marked conditional_only.
RationalAuditReport rational_audit(const EpistemicState& state,
                                   const std::vector<Formula>& formula_pool);

}  // namespace popper
