#include "popper/nmr.hpp"

#include <initializer_list>
#include <sstream>
#include <utility>

#include "popper/cores.hpp"

namespace popper {

namespace {

void require_normal(const EpistemicState& state) {
  if (state.is_abnormal()) {
    throw ModelError(
        "nonmonotonic consequence is undefined for the abnormal state "
        "(every query would be vacuously true)");
  }
}

}  // namespace

bool nm_follows(const EpistemicState& state, const Formula& premise,
                const Formula& conclusion) {
  require_normal(state);
  return state.popper_eval(extension(conclusion, state.universe()),
                           extension(premise, state.universe())) == 1;
}

bool nm_follows_via_cores(const EpistemicState& state, const Formula& premise,
                          const Formula& conclusion) {
  require_normal(state);
  const EpistemicState revised =
      suppose(state, extension(premise, state.universe()));
  return innermost(revised).is_subset_of(
      extension(conclusion, state.universe()));
}

bool RationalAuditReport::passed() const {
  for (const auto& p : postulates) {
    if (!p.passed()) return false;
  }
  return true;
}

std::size_t RationalAuditReport::total_failures() const {
  std::size_t total = 0;
  for (const auto& p : postulates) {
    total += p.failures.size();
  }
  return total;
}

std::string RationalAuditReport::to_text() const {
  std::ostringstream os;
  os << "rational-consequence audit ("
     << (universal && consistent ? "full regime"
                                 : "restricted to entertainable antecedents")
     << ")\n";
  for (const auto& p : postulates) {
    os << "  " << (p.passed() ? "pass" : "FAIL") << "  " << p.name << ": "
       << p.instances_checked << " instances, " << p.failures.size()
       << " failures" << (p.conditional_only ? " (conditional)" : "") << "\n";
    for (const auto& f : p.failures) {
      os << "         " << f << "\n";
    }
  }
  return os.str();
}

namespace {

// One deduplicated pool entry: the formula plus its extension.
struct PoolEntry {
  Formula formula;
  Prop ext;
};

class PostulateAuditor {
 public:
  PostulateAuditor(const EpistemicState& state, std::vector<PoolEntry> pool,
                   bool restricted)
      : state_(state), pool_(std::move(pool)), restricted_(restricted) {}

  // A |~ B as the two-place function sees it.
  bool follows(const Prop& a, const Prop& b) const {
    return state_.popper_eval(b, a) == 1;
  }

  bool usable_antecedent(const Prop& a) const {
    return !restricted_ || entertainable(state_, a);
  }

  PostulateResult reflexivity() {
    PostulateResult r{"Reflexivity"};
    for (const auto& a : pool_) {
      if (!usable_antecedent(a.ext)) { r.conditional_only = true; continue; }
      ++r.instances_checked;
      if (!follows(a.ext, a.ext)) {
        fail(r, {a.formula}, "A |~ A does not hold");
      }
    }
    return r;
  }

  // The pool is deduplicated up to equivalence, so equivalent pairs are
  // manufactured: double negation and idempotent conjunction of each entry.
  PostulateResult left_logical_equivalence() {
    PostulateResult r{"Left Logical Equivalence"};
    for (const auto& a : pool_) {
      if (!usable_antecedent(a.ext)) { r.conditional_only = true; continue; }
      const Formula variants[] = {
          Formula::negation(Formula::negation(a.formula)),
          Formula::conjunction(a.formula, a.formula)};
      for (const auto& variant : variants) {
        const Prop variant_ext = extension(variant, state_.universe());
        for (const auto& c : pool_) {
          ++r.instances_checked;
          if (follows(a.ext, c.ext) != follows(variant_ext, c.ext)) {
            fail(r, {a.formula, variant, c.formula},
                 "equivalent antecedents disagree");
          }
        }
      }
    }
    return r;
  }

  PostulateResult right_weakening() {
    PostulateResult r{"Right Weakening"};
    for (const auto& b : pool_) {
      for (const auto& c : pool_) {
        if (!b.ext.is_subset_of(c.ext)) continue;  // needs B entails C
        for (const auto& a : pool_) {
          if (!usable_antecedent(a.ext)) { r.conditional_only = true; continue; }
          ++r.instances_checked;
          if (follows(a.ext, b.ext) && !follows(a.ext, c.ext)) {
            fail(r, {a.formula, b.formula, c.formula},
                 "A |~ B and B entails C, yet not A |~ C");
          }
        }
      }
    }
    return r;
  }

  PostulateResult and_rule() {
    PostulateResult r{"And"};
    for (const auto& a : pool_) {
      if (!usable_antecedent(a.ext)) { r.conditional_only = true; continue; }
      for (const auto& b : pool_) {
        if (!follows(a.ext, b.ext)) continue;
        for (const auto& c : pool_) {
          ++r.instances_checked;
          if (follows(a.ext, c.ext) && !follows(a.ext, b.ext & c.ext)) {
            fail(r, {a.formula, b.formula, c.formula},
                 "A |~ B and A |~ C, yet not A |~ B&C");
          }
        }
      }
    }
    return r;
  }

  PostulateResult or_rule() {
    PostulateResult r{"Or"};
    for (const auto& a : pool_) {
      for (const auto& b : pool_) {
        const Prop joined = a.ext | b.ext;
        if (!usable_antecedent(a.ext) || !usable_antecedent(b.ext) ||
            !usable_antecedent(joined)) {
          r.conditional_only = true;
          continue;
        }
        for (const auto& c : pool_) {
          ++r.instances_checked;
          if (follows(a.ext, c.ext) && follows(b.ext, c.ext) &&
              !follows(joined, c.ext)) {
            fail(r, {a.formula, b.formula, c.formula},
                 "A |~ C and B |~ C, yet not A|B |~ C");
          }
        }
      }
    }
    return r;
  }

  PostulateResult cautious_monotonicity() {
    PostulateResult r{"Cautious Monotonicity"};
    for (const auto& a : pool_) {
      for (const auto& b : pool_) {
        const Prop narrowed = a.ext & b.ext;
        if (!usable_antecedent(a.ext) || !usable_antecedent(narrowed)) {
          r.conditional_only = true;
          continue;
        }
        if (!follows(a.ext, b.ext)) continue;
        for (const auto& c : pool_) {
          ++r.instances_checked;
          if (follows(a.ext, c.ext) && !follows(narrowed, c.ext)) {
            fail(r, {a.formula, b.formula, c.formula},
                 "A |~ B and A |~ C, yet not A&B |~ C");
          }
        }
      }
    }
    return r;
  }

  PostulateResult rational_monotonicity() {
    PostulateResult r{"Rational Monotonicity"};
    for (const auto& a : pool_) {
      for (const auto& b : pool_) {
        const Prop narrowed = a.ext & b.ext;
        if (!usable_antecedent(a.ext) || !usable_antecedent(narrowed)) {
          r.conditional_only = true;
          continue;
        }
        if (follows(a.ext, ~b.ext)) continue;  // A |~ ~B blocks the rule
        for (const auto& c : pool_) {
          ++r.instances_checked;
          if (follows(a.ext, c.ext) && !follows(narrowed, c.ext)) {
            fail(r, {a.formula, b.formula, c.formula},
                 "A |~ C and not A |~ ~B, yet not A&B |~ C");
          }
        }
      }
    }
    return r;
  }

  PostulateResult consistency_preservation() {
    PostulateResult r{"Consistency Preservation"};
    const Prop empty(state_.universe().size());
    for (const auto& a : pool_) {
      if (a.ext.empty()) continue;  // only consistent antecedents
      if (!usable_antecedent(a.ext)) { r.conditional_only = true; continue; }
      ++r.instances_checked;
      if (follows(a.ext, empty)) {
        fail(r, {a.formula}, "consistent A yields A |~ FALSE");
      }
    }
    return r;
  }

 private:
  void fail(PostulateResult& r, std::initializer_list<Formula> formulas,
            const std::string& what) {
    std::string line = what + " [";
    bool first = true;
    for (const auto& f : formulas) {
      if (!first) line += " ; ";
      line += format_formula(f);
      first = false;
    }
    r.failures.push_back(line + "]");
  }

  const EpistemicState& state_;
  std::vector<PoolEntry> pool_;
  bool restricted_;
};

}  // namespace

RationalAuditReport rational_audit(const EpistemicState& state,
                                   const std::vector<Formula>& formula_pool) {
  RationalAuditReport report;
  report.universal =
      !state.is_abnormal() && outermost(state) == state.universe().full_prop();
  report.consistent = !innermost(state).empty();
  const bool restricted = !(report.universal && report.consistent);

  // Deduplicate the pool up to logical equivalence over this universe.
  std::vector<PoolEntry> pool;
  for (const auto& f : formula_pool) {
    Prop ext = extension(f, state.universe());
    bool duplicate = false;
    for (const auto& entry : pool) {
      if (entry.ext == ext) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      pool.push_back({f, std::move(ext)});
    }
  }

  PostulateAuditor auditor(state, std::move(pool), restricted);
  report.postulates.push_back(auditor.reflexivity());
  report.postulates.push_back(auditor.left_logical_equivalence());
  report.postulates.push_back(auditor.right_weakening());
  report.postulates.push_back(auditor.and_rule());
  report.postulates.push_back(auditor.or_rule());
  report.postulates.push_back(auditor.cautious_monotonicity());
  report.postulates.push_back(auditor.rational_monotonicity());
  report.postulates.push_back(auditor.consistency_preservation());
  return report;
}

}  // namespace popper
