#include "popper/table.hpp"

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

void check_bound(std::size_t n, std::size_t max_worlds) {
  if (n > max_worlds || n > 12) {
    throw BoundError("universe of " + std::to_string(n) +
                     " worlds exceeds the conditional-table bound of " +
                     std::to_string(max_worlds));
  }
}

}  // namespace

ConditionalTable::ConditionalTable(UniversePtr universe,
                                   std::vector<Rational> entries)
    : universe_(std::move(universe)),
      n_(universe_->size()),
      entries_(std::move(entries)) {}

ConditionalTable ConditionalTable::of_state(const EpistemicState& state,
                                            std::size_t max_worlds) {
  const std::size_t n = state.universe().size();
  check_bound(n, max_worlds);
  const unsigned long long subsets = 1ULL << n;
  std::vector<Rational> entries(subsets * subsets);
  for (unsigned long long a = 0; a < subsets; ++a) {
    const Prop pa = prop_from_mask(a, n);
    for (unsigned long long b = 0; b < subsets; ++b) {
      entries[(a << n) | b] = state.popper_eval(prop_from_mask(b, n), pa);
    }
  }
  return ConditionalTable(state.universe_ptr(), std::move(entries));
}

ConditionalTable ConditionalTable::from_entries(UniversePtr universe,
                                                std::vector<Rational> entries) {
  if (!universe) {
    throw ModelError("null universe");
  }
  check_bound(universe->size(), 12);
  const unsigned long long subsets = 1ULL << universe->size();
  if (entries.size() != subsets * subsets) {
    throw ModelError("conditional table needs " +
                     std::to_string(subsets * subsets) + " entries, got " +
                     std::to_string(entries.size()));
  }
  ConditionalTable table(std::move(universe), std::move(entries));
  table.validate();
  return table;
}

void ConditionalTable::validate() const {
  const std::size_t n = n_;
  const unsigned long long subsets = 1ULL << n;
  const unsigned long long full = subsets - 1;
  const auto set_name = [&](unsigned long long mask) {
    return universe_->format_prop(prop_from_mask(mask, n));
  };

  // Axiom (I), per antecedent: constant 1, or a finitely-additive probability
  // measure (pinned down by singleton values on a finite space).
  std::vector<bool> abnormal(subsets, false);
  for (unsigned long long a = 0; a < subsets; ++a) {
    if (at(0, a) == 1) {
      abnormal[a] = true;
      for (unsigned long long b = 0; b < subsets; ++b) {
        if (at(b, a) != 1) {
          throw ModelError(
              "axiom (I) violated: P(EMPTY|" + set_name(a) + ") = 1 but P(" +
              set_name(b) + "|" + set_name(a) + ") = " +
              format_rational(at(b, a)) + ", not constantly 1");
        }
      }
      continue;
    }
    if (at(0, a) != 0) {
      throw ModelError("axiom (I) violated: P(EMPTY|" + set_name(a) + ") = " +
                       format_rational(at(0, a)) + ", expected 0 or 1");
    }
    if (at(full, a) != 1) {
      throw ModelError("axiom (I) violated: P(U|" + set_name(a) + ") = " +
                       format_rational(at(full, a)) + ", expected 1");
    }
    for (unsigned long long b = 0; b < subsets; ++b) {
      const Rational& value = at(b, a);
      if (value < 0 || value > 1) {
        throw ModelError("axiom (I) violated: P(" + set_name(b) + "|" +
                         set_name(a) + ") = " + format_rational(value) +
                         " is outside [0, 1]");
      }
      Rational additive = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (b & (1ULL << w)) {
          additive += at(1ULL << w, a);
        }
      }
      if (value != additive) {
        throw ModelError("axiom (I) violated: P(" + set_name(b) + "|" +
                         set_name(a) + ") = " + format_rational(value) +
                         " differs from the sum of its singletons " +
                         format_rational(additive));
      }
    }
  }
  // The empty antecedent must be abnormal; otherwise the multiplication
  // axiom admits 0/1 point masses conditional on EMPTY, which no ranked
  // representation can produce.
  if (!abnormal[0]) {
    throw ModelError(
        "axiom (I) violated: the empty antecedent must be abnormal "
        "(P(B|EMPTY) = 1 for all B)");
  }

  // Axiom (II), multiplication, literally over all triples. Skip the
  // multiply for the ubiquitous 0/1 factors.
  for (unsigned long long a = 0; a < subsets; ++a) {
    for (unsigned long long b = 0; b < subsets; ++b) {
      const Rational& p_b = at(b, a);
      for (unsigned long long c = 0; c < subsets; ++c) {
        const Rational& lhs = at(b & c, a);
        const Rational& p_c = at(c, b & a);
        bool ok;
        if (p_b == 0 || p_c == 0) {
          ok = lhs == 0;
        } else if (p_b == 1) {
          ok = lhs == p_c;
        } else if (p_c == 1) {
          ok = lhs == p_b;
        } else {
          ok = lhs == p_b * p_c;
        }
        if (!ok) {
          throw ModelError(
              "axiom (II) violated at A=" + set_name(a) + ", B=" +
              set_name(b) + ", C=" + set_name(c) + ": P(B&C|A) = " +
              format_rational(lhs) + " but P(B|A)*P(C|B&A) = " +
              format_rational(p_b * p_c));
        }
      }
    }
  }
}

ConditionalTable to_conditional_table(const EpistemicState& state,
                                      std::size_t max_worlds) {
  return ConditionalTable::of_state(state, max_worlds);
}

EpistemicState from_conditional_table(const ConditionalTable& table) {
  table.validate();
  const std::size_t n = table.universe_size();
  const unsigned long long full = (1ULL << n) - 1;
  std::vector<RankMeasure> ranks;
  unsigned long long remaining = full;
  while (remaining != 0) {
    if (table.at(0, remaining) == 1) {
      break;  // the remainder is abnormal: all its worlds are non-entertainable
    }
    std::map<std::size_t, Rational> weights;
    for (std::size_t w = 0; w < n; ++w) {
      const unsigned long long bit = 1ULL << w;
      if (!(remaining & bit)) continue;
      const Rational& weight = table.at(bit, remaining);
      if (weight > 0) {
        weights.emplace(w, weight);
      }
    }
    if (weights.empty()) {
      // Unreachable for validated tables: a normal antecedent concentrates
      // its (unit) mass on its own worlds.
      throw ModelError("invalid conditional table: antecedent " +
                       table.universe().format_prop(
                           Prop(boost::dynamic_bitset<>(n, remaining))) +
                       " is normal yet carries no singleton mass");
    }
    unsigned long long support = 0;
    for (const auto& [w, weight] : weights) {
      support |= 1ULL << w;
    }
    ranks.emplace_back(std::move(weights));
    remaining &= ~support;
  }
  return EpistemicState::build(table.universe_ptr(), std::move(ranks));
}

}  // namespace popper
