#include "popper/audit.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>
#include <unordered_map>

#include "popper/cores.hpp"
#include "popper/errors.hpp"
#include "popper/model_io.hpp"
#include "popper/supposition.hpp"
#include "popper/table.hpp"

namespace popper {

bool AuditReport::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const AxiomResult& r) { return r.passed(); });
}

std::size_t AuditReport::instances_checked() const {
  std::size_t total = 0;
  for (const auto& r : results) total += r.instances_checked;
  return total;
}

std::size_t AuditReport::total_failures() const {
  std::size_t total = 0;
  for (const auto& r : results) total += r.failures.size();
  return total;
}

void AuditReport::merge(const AuditReport& other) {
  for (const auto& r : other.results) {
    auto it = std::find_if(
        results.begin(), results.end(),
        [&](const AxiomResult& mine) { return mine.name == r.name; });
    if (it == results.end()) {
      results.push_back(r);
    } else {
      it->instances_checked += r.instances_checked;
      it->failures.insert(it->failures.end(), r.failures.begin(),
                          r.failures.end());
    }
  }
}

namespace {

std::string indent_block(const std::string& text, const std::string& prefix) {
  std::string out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    out += prefix + text.substr(start, end - start) + "\n";
    start = end + 1;
  }
  return out;
}

std::string escape_newlines(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string AuditReport::to_text() const {
  std::ostringstream os;
  os << "axiom audit: " << instances_checked() << " instances, "
     << total_failures() << " failures\n";
  for (const auto& r : results) {
    os << "  " << (r.passed() ? "pass" : "FAIL") << "  " << r.name << ": "
       << r.instances_checked << " instances, " << r.failures.size()
       << " failures\n";
    for (const auto& f : r.failures) {
      os << "    counterexample: " << f.inputs << "\n";
      os << "      expected: " << f.expected << "\n";
      os << "      actual:   " << f.actual << "\n";
      os << "      state:\n" << indent_block(f.state_model, "        ");
    }
  }
  return os.str();
}

std::vector<std::string> AuditReport::to_lines() const {
  std::vector<std::string> lines;
  for (const auto& r : results) {
    std::ostringstream os;
    os << "axiom=" << r.name << " instances=" << r.instances_checked
       << " failures=" << r.failures.size()
       << " status=" << (r.passed() ? "pass" : "fail");
    lines.push_back(os.str());
    for (const auto& f : r.failures) {
      std::ostringstream fo;
      fo << "counterexample axiom=" << r.name << " inputs=" << f.inputs
         << " expected=" << f.expected << " actual=" << f.actual
         << " state=" << escape_newlines(f.state_model);
      lines.push_back(fo.str());
    }
  }
  return lines;
}

namespace {

// Engine-output modulo keeps the draw sequence identical across platforms,
// unlike std::uniform_int_distribution.
std::uint64_t bounded(std::mt19937_64& engine, std::uint64_t lo,
                      std::uint64_t hi) {
  return lo + engine() % (hi - lo + 1);
}

}  // namespace

EpistemicState random_state(const GeneratorParams& params) {
  if (params.max_atoms == 0 || params.max_atoms > 16) {
    throw ModelError("max_atoms must be in 1..16");
  }
  if (params.max_ranks == 0) throw ModelError("max_ranks must be positive");
  if (params.weight_denominator_bound == 0) {
    throw ModelError("weight_denominator_bound must be positive");
  }
  const Rational& fraction = params.non_entertainable_fraction;
  if (fraction < 0 || fraction > 1) {
    throw ModelError("non_entertainable_fraction must lie in [0,1]");
  }

  std::mt19937_64 engine(params.seed);
  const auto atom_count =
      static_cast<unsigned>(bounded(engine, 1, params.max_atoms));
  const std::size_t world_count = std::size_t{1} << atom_count;
  UniversePtr universe = indexed_universe(1u << atom_count);

  const auto num = numerator(fraction).convert_to<std::uint64_t>();
  const auto den = denominator(fraction).convert_to<std::uint64_t>();
  std::vector<std::size_t> entertainable;
  for (std::size_t w = 0; w < world_count; ++w) {
    if (bounded(engine, 0, den - 1) >= num) entertainable.push_back(w);
  }
  if (entertainable.empty()) {
    return EpistemicState::abnormal(std::move(universe));
  }

  for (std::size_t i = entertainable.size() - 1; i > 0; --i) {
    std::swap(entertainable[i], entertainable[bounded(engine, 0, i)]);
  }

  const auto rank_count = static_cast<std::size_t>(bounded(
      engine, 1,
      std::min<std::uint64_t>(params.max_ranks, entertainable.size())));
  std::vector<std::vector<std::size_t>> members(rank_count);
  for (std::size_t k = 0; k < entertainable.size(); ++k) {
    // Seed every rank once so none comes out empty.
    const std::size_t group =
        k < rank_count ? k : bounded(engine, 0, rank_count - 1);
    members[group].push_back(entertainable[k]);
  }

  std::vector<RankMeasure> ranks;
  for (const auto& group : members) {
    std::vector<std::uint64_t> raw;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < group.size(); ++i) {
      raw.push_back(bounded(engine, 1, params.weight_denominator_bound));
      total += raw.back();
    }
    std::map<std::size_t, Rational> weights;
    for (std::size_t i = 0; i < group.size(); ++i) {
      weights[group[i]] = Rational(raw[i], total);
    }
    ranks.emplace_back(std::move(weights));
  }
  return EpistemicState::build(std::move(universe), std::move(ranks));
}

namespace {

// Runs the full battery against one state. Axiom slots are created up front
// in a fixed order so merged reports line up across states.
class AxiomChecker {
 public:
  AxiomChecker(const EpistemicState& state, const std::vector<Prop>& pool,
               const AxiomCheckOptions& options)
      : state_(state), pool_(pool), options_(options) {}

  AuditReport run() {
    const char* names[] = {"Expansion",
                           "Success",
                           "Preservation",
                           "Restricted Consistency Preservation",
                           "Fixity",
                           "Cumulativity",
                           "Global Success",
                           "E1",
                           "E2",
                           "E3",
                           "E4",
                           "Core Dynamics",
                           "Probabilistic Cumulativity",
                           "Consistency Preservation",
                           "Conjunctive Revision",
                           "Core Oracle"};
    for (const char* name : names) report_.results.push_back({name, 0, {}});

    const bool abnormal = state_.is_abnormal();
    const Prop i0 = innermost(state_);
    const Prop f0 = outermost(state_);
    const bool universal =
        !abnormal && f0 == state_.universe().full_prop();
    const bool consistent = !i0.empty();

    std::vector<EpistemicState> revised;
    std::vector<Prop> inner;
    revised.reserve(pool_.size());
    for (const Prop& a : pool_) {
      revised.push_back(suppose(state_, a));
      inner.push_back(innermost(revised.back()));
    }

    for (std::size_t i = 0; i < pool_.size(); ++i) {
      const Prop& a = pool_[i];
      const Prop& ia = inner[i];
      const Prop fa = outermost(revised[i]);
      const std::string in_a = "A=" + prop_text(a);

      check_props(slot(0), in_a, f0 & a, fa);
      check_holds(slot(1), in_a, ia.is_subset_of(a), "I(s*A) within A",
                  "I(s*A)=" + prop_text(ia));
      if (i0.intersects(a)) {
        check_props(slot(2), in_a, i0 & a, ia);
      }
      if (!i0.empty() && f0.intersects(a)) {
        check_holds(slot(3), in_a, !ia.empty(), "I(s*A) nonempty",
                    "I(s*A)={}");
      }
      if (abnormal) {
        check_holds(slot(4), in_a, ia.empty() && fa.empty(),
                    "I(s*A)={} and F(s*A)={}",
                    "I(s*A)=" + prop_text(ia) + " F(s*A)=" + prop_text(fa));
      }
      check_holds(slot(7), in_a, ia.is_subset_of(a), "I(s*A) within A",
                  "I(s*A)=" + prop_text(ia));
      if (i0.is_subset_of(a)) {
        check_props(slot(8), in_a, i0, ia);
      }
      if (f0.intersects(a)) {
        check_core_dynamics(slot(11), in_a, a, revised[i]);
      }
      if (universal && consistent && !a.empty()) {
        check_holds(slot(13), in_a, !ia.empty(), "I(s*A) nonempty",
                    "I(s*A)={}");
      }
    }

    run_pairs(universal && consistent, inner, revised);

    if (options_.core_oracle &&
        state_.universe().size() <= kDefaultBruteforceBound) {
      AxiomResult& r = slot(15);
      ++r.instances_checked;
      const CoreSystem ranked = cores_of(state_);
      const CoreSystem brute = cores_bruteforce(state_);
      if (!(ranked == brute)) {
        record(r, "whole state", core_list_text(ranked),
               core_list_text(brute));
      }
    }
    return report_;
  }

 private:
  void run_pairs(bool universal_consistent, const std::vector<Prop>& inner,
                 const std::vector<EpistemicState>& revised) {
    const std::size_t n = pool_.size();
    const bool can_mask = state_.universe().size() <= 64;
    std::unordered_map<unsigned long long, Prop> meet_cache;

    // Sample the expensive table comparison evenly over the pair grid.
    std::size_t table_budget = 0;
    std::size_t table_stride = 1;
    if (options_.table_pairs > 0 &&
        state_.universe().size() <= options_.table_world_bound) {
      table_budget = options_.table_pairs;
      table_stride = std::max<std::size_t>(1, n * n / table_budget);
    }

    std::size_t pair_index = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Prop& a = pool_[i];
      for (std::size_t j = 0; j < n; ++j, ++pair_index) {
        const Prop& b = pool_[j];
        const std::string in_ab =
            "A=" + prop_text(a) + " B=" + prop_text(b);

        const EpistemicState twice = suppose(revised[i], b);
        const Prop i_twice = innermost(twice);
        const Prop meet = a & b;

        const Prop* i_meet = nullptr;
        if (can_mask) {
          const auto key = meet.mask();
          auto it = meet_cache.find(key);
          if (it == meet_cache.end()) {
            it = meet_cache.emplace(key, innermost(suppose(state_, meet)))
                     .first;
          }
          i_meet = &it->second;
        }
        Prop i_meet_local;
        if (i_meet == nullptr) {
          i_meet_local = innermost(suppose(state_, meet));
          i_meet = &i_meet_local;
        }

        check_props(slot(5), in_ab, *i_meet, i_twice);
        check_holds(slot(6), in_ab, i_twice.is_subset_of(a),
                    "I((s*A)*B) within A", "I((s*A)*B)=" + prop_text(i_twice));

        // E3/E4 instantiated at (A&B, B): the left side entails the right by
        // construction, so the guards are live rather than vacuous.
        const Prop& i_b = inner[j];
        const std::string in_meet =
            "A=" + prop_text(meet) + " B=" + prop_text(pool_[j]);
        if (i_b.intersects(meet)) {
          check_props(slot(9), in_meet, i_b & meet, *i_meet);
        }
        if (i_b.empty()) {
          check_holds(slot(10), in_meet, i_meet->empty(), "I(s*A)={}",
                      "I(s*A)=" + prop_text(*i_meet));
        }

        if (universal_consistent && inner[i].intersects(b)) {
          check_props(slot(14), in_ab, inner[i] & b, *i_meet);
        }

        if (table_budget > 0 && pair_index % table_stride == 0) {
          --table_budget;
          AxiomResult& r = slot(12);
          ++r.instances_checked;
          const auto bound = options_.table_world_bound;
          const ConditionalTable lhs = to_conditional_table(twice, bound);
          const ConditionalTable rhs =
              to_conditional_table(suppose(state_, meet), bound);
          if (!(lhs == rhs)) {
            record(r, in_ab, "tables of (s*A)*B and s*(A&B) equal",
                   "tables differ");
          }
        }
      }
    }
  }

  void check_core_dynamics(AxiomResult& r, const std::string& inputs,
                           const Prop& a, const EpistemicState& revised) {
    ++r.instances_checked;
    std::vector<Prop> expected;
    for (const Prop& c : cores_of(state_).cores) {
      const Prop cut = c & a;
      if (cut.empty()) continue;
      if (expected.empty() || expected.back() != cut) expected.push_back(cut);
    }
    const CoreSystem actual = cores_of(revised);
    if (expected != actual.cores) {
      record(r, inputs, prop_list_text(expected),
             core_list_text(actual));
    }
  }

  AxiomResult& slot(std::size_t index) { return report_.results[index]; }

  void check_props(AxiomResult& r, const std::string& inputs,
                   const Prop& expected, const Prop& actual) {
    ++r.instances_checked;
    if (expected != actual) {
      record(r, inputs, prop_text(expected), prop_text(actual));
    }
  }

  void check_holds(AxiomResult& r, const std::string& inputs, bool ok,
                   const std::string& expected, const std::string& actual) {
    ++r.instances_checked;
    if (!ok) record(r, inputs, expected, actual);
  }

  void record(AxiomResult& r, const std::string& inputs,
              const std::string& expected, const std::string& actual) {
    if (state_model_.empty()) state_model_ = serialize_model(state_);
    r.failures.push_back({state_model_, inputs, expected, actual});
  }

  std::string prop_text(const Prop& p) const {
    return state_.universe().format_prop(p);
  }

  std::string prop_list_text(const std::vector<Prop>& props) const {
    std::string out = "[";
    for (std::size_t i = 0; i < props.size(); ++i) {
      if (i > 0) out += ", ";
      out += prop_text(props[i]);
    }
    return out + "]";
  }

  std::string core_list_text(const CoreSystem& cores) const {
    return prop_list_text(cores.cores);
  }

  const EpistemicState& state_;
  const std::vector<Prop>& pool_;
  const AxiomCheckOptions& options_;
  AuditReport report_;
  std::string state_model_;
};

}  // namespace

AuditReport check_axioms(const EpistemicState& state,
                         const std::vector<Prop>& proposition_pool,
                         const AxiomCheckOptions& options) {
  if (proposition_pool.empty()) {
    throw ModelError("check_axioms needs a nonempty proposition pool");
  }
  return AxiomChecker(state, proposition_pool, options).run();
}

std::optional<Prop> find_cp_violation(const EpistemicState& state) {
  if (state.is_abnormal()) return std::nullopt;
  const Prop missing = ~outermost(state);
  if (missing.empty()) return std::nullopt;
  return missing;
}

UniversePtr indexed_universe(unsigned world_count) {
  unsigned atom_count = 1;
  while ((1u << atom_count) < world_count) ++atom_count;
  std::vector<std::string> atoms;
  for (unsigned j = 0; j < atom_count; ++j) {
    atoms.push_back(std::string(1, static_cast<char>('a' + j)));
  }
  std::vector<World> worlds;
  for (unsigned w = 0; w < world_count; ++w) {
    World world;
    world.id = "w" + std::to_string(w);
    for (unsigned j = 0; j < atom_count; ++j) {
      world.valuation[atoms[j]] = ((w >> j) & 1) != 0;
    }
    worlds.push_back(std::move(world));
  }
  return std::make_shared<const Universe>(std::move(atoms),
                                          std::move(worlds));
}

Prop prop_from_mask(std::size_t universe_size, unsigned long long mask) {
  Prop p(universe_size);
  for (std::size_t w = 0; w < universe_size; ++w) {
    if ((mask >> w) & 1u) p.add(w);
  }
  return p;
}

namespace {

// Exact weights for one rank: uniform, or mildly skewed toward the first
// member (2/(m+1), then 1/(m+1) each). Axiom verdicts are weight-independent
// given the rank structure, so two samples per shape suffice; the skewed one
// keeps non-trivial arithmetic in play.
// Weight grid for the enumeration: uniform everywhere, with one skewed
// variant for blocks of two (3/4, 1/4) or three (1/2, 1/4, 1/4). Larger
// blocks only get the uniform assignment; any skew at those sizes would
// need a finer denominator, and the reweighting metamorphic test shows the
// verdicts cannot depend on the choice anyway.
std::map<std::size_t, Rational> rank_weights(
    const std::vector<std::size_t>& block, bool skewed) {
  std::map<std::size_t, Rational> weights;
  const std::size_t m = block.size();
  if (skewed && m == 2) {
    weights[block[0]] = Rational(3, 4);
    weights[block[1]] = Rational(1, 4);
  } else if (skewed && m == 3) {
    weights[block[0]] = Rational(1, 2);
    weights[block[1]] = Rational(1, 4);
    weights[block[2]] = Rational(1, 4);
  } else {
    for (std::size_t w : block) weights[w] = Rational(1, m);
  }
  return weights;
}

template <typename Callback>
void enumerate_ordered_partitions(unsigned remaining_mask,
                                  std::vector<unsigned>& blocks,
                                  Callback&& emit) {
  if (remaining_mask == 0) {
    emit(blocks);
    return;
  }
  for (unsigned sub = remaining_mask; sub != 0;
       sub = (sub - 1) & remaining_mask) {
    blocks.push_back(sub);
    enumerate_ordered_partitions(remaining_mask & ~sub, blocks, emit);
    blocks.pop_back();
  }
}

}  // namespace

void for_each_small_state(
    const UniversePtr& universe,
    const std::function<void(const EpistemicState&)>& visit) {
  const std::size_t u = universe->size();
  if (u > 24) throw BoundError("state enumeration is exponential in worlds");
  visit(EpistemicState::abnormal(universe));
  for (unsigned e_mask = 1; e_mask < (1u << u); ++e_mask) {
    std::vector<unsigned> blocks;
    enumerate_ordered_partitions(
        e_mask, blocks, [&](const std::vector<unsigned>& partition) {
          std::vector<std::vector<std::size_t>> members_per_block;
          bool any_skewable = false;
          for (unsigned b : partition) {
            std::vector<std::size_t> members;
            for (std::size_t w = 0; w < u; ++w) {
              if ((b >> w) & 1u) members.push_back(w);
            }
            if (members.size() == 2 || members.size() == 3) {
              any_skewable = true;
            }
            members_per_block.push_back(std::move(members));
          }
          // The skewed pass only differs when some block supports a skew.
          const int variants = any_skewable ? 2 : 1;
          for (int v = 0; v < variants; ++v) {
            std::vector<RankMeasure> ranks;
            for (const auto& members : members_per_block) {
              ranks.emplace_back(rank_weights(members, v == 1));
            }
            visit(EpistemicState::build(universe, std::move(ranks)));
          }
        });
  }
}

AuditReport exhaustive_small_space_audit(unsigned max_worlds) {
  if (max_worlds == 0) {
    throw BoundError("exhaustive audit needs at least one world");
  }
  if (max_worlds > 5) {
    throw BoundError(
        "exhaustive audit caps at 5 worlds: states x propositions x pairs "
        "is exponential three times over");
  }

  AuditReport report;
  AxiomCheckOptions options;
  options.core_oracle = true;

  for (unsigned u = 1; u <= max_worlds; ++u) {
    const UniversePtr universe = indexed_universe(u);
    std::vector<Prop> pool;
    for (unsigned mask = 0; mask < (1u << u); ++mask) {
      pool.push_back(prop_from_mask(u, mask));
    }
    for_each_small_state(universe, [&](const EpistemicState& state) {
      report.merge(check_axioms(state, pool, options));
    });
  }
  return report;
}

}  // namespace popper
