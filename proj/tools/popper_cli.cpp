// Command-line front end: validate models, evaluate two-place probabilities,
// run supposition sequences, answer queries, audit the axioms, and emit the
// bundled example models.
//
// Exit codes: 0 success, 1 domain error (bad model, unknown atom),
// 2 usage error, 3 audit failure.

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "popper/audit.hpp"
#include "popper/cores.hpp"
#include "popper/errors.hpp"
#include "popper/examples.hpp"
#include "popper/model_io.hpp"
#include "popper/nmr.hpp"
#include "popper/supposition.hpp"
#include "popper/table.hpp"

namespace {

constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;
constexpr int kExitAuditFailure = 3;

struct Options {
  std::string model_path;
  std::string query_kind;
  std::vector<std::string> formulas;
  std::string audit_mode;
  std::string example_name;
  std::string out_path;
  std::string format = "text";
  std::uint64_t seeds = 100;
  unsigned pool_size = 32;
  unsigned max_worlds = 0;  // 0 = subcommand default
  unsigned coin_n = 16;
};

std::string describe_state_brief(const popper::EpistemicState& state) {
  const auto& u = state.universe();
  std::string text = std::to_string(u.size()) + " worlds, " +
                     std::to_string(u.atoms().size()) + " atoms, ";
  if (state.is_abnormal()) {
    text += "abnormal (no ranks)";
  } else {
    text += std::to_string(state.ranks().size()) + " ranks";
  }
  return text;
}

int run_check(const Options& opt) {
  const popper::EpistemicState state = popper::load_model(opt.model_path);
  std::cout << "model ok: " << describe_state_brief(state) << "\n";
  const popper::CoreSystem cores = popper::cores_of(state);
  std::cout << "cores: " << cores.cores.size() << "\n";
  for (std::size_t i = 0; i < cores.cores.size(); ++i) {
    std::string tag;
    if (i == 0) tag += "innermost";
    if (i + 1 == cores.cores.size()) {
      if (!tag.empty()) tag += ", ";
      tag += "outermost";
    }
    std::cout << "  core " << i << (tag.empty() ? "" : " (" + tag + ")")
              << ": " << state.universe().format_prop(cores.cores[i]) << "\n";
  }
  return 0;
}

int run_eval(const Options& opt) {
  const popper::EpistemicState state = popper::load_model(opt.model_path);
  const popper::Formula b = popper::parse_formula(opt.formulas[0]);
  const popper::Formula a = popper::parse_formula(opt.formulas[1]);
  const popper::Prop b_ext = popper::extension(b, state.universe());
  const popper::Prop a_ext = popper::extension(a, state.universe());
  if (state.is_abnormal()) {
    std::cout << "1 (state abnormal)\n";
  } else if (!state.is_normal(a_ext)) {
    std::cout << "1 (antecedent abnormal)\n";
  } else {
    std::cout << popper::format_rational(state.popper_eval(b_ext, a_ext))
              << "\n";
  }
  return 0;
}

void print_state_lines(const popper::EpistemicState& state,
                       const std::string& indent) {
  const auto& u = state.universe();
  for (std::size_t i = 0; i < state.ranks().size(); ++i) {
    std::cout << indent << "rank " << i << ":";
    for (const auto& [world, weight] : state.ranks()[i].weights()) {
      std::cout << " " << u.world(world).id << "="
                << popper::format_rational(weight);
    }
    std::cout << "\n";
  }
  std::cout << indent << "innermost "
            << u.format_prop(popper::innermost(state)) << ", outermost "
            << u.format_prop(popper::outermost(state)) << ", coherent\n";
}

int run_suppose(const Options& opt) {
  const popper::EpistemicState state = popper::load_model(opt.model_path);
  std::vector<popper::Formula> formulas;
  for (const auto& text : opt.formulas) {
    formulas.push_back(popper::parse_formula(text));
  }
  const popper::SuppositionTrace trace = popper::suppose_seq(state, formulas);

  if (trace.initial.is_abnormal()) {
    std::cout << "initial: INCOHERENT\n";
  } else {
    std::cout << "initial: " << describe_state_brief(trace.initial) << "\n";
    print_state_lines(trace.initial, "  ");
  }
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    std::cout << "step " << (i + 1) << ": suppose ";
    if (step.source_formula) {
      std::cout << popper::format_formula(*step.source_formula) << " = ";
    }
    std::cout << state.universe().format_prop(step.supposed) << "\n";
    if (step.result.is_abnormal()) {
      std::cout << "  INCOHERENT\n";
    } else {
      print_state_lines(step.result, "  ");
    }
  }
  return 0;
}

int run_query(const Options& opt) {
  const popper::EpistemicState state = popper::load_model(opt.model_path);
  const auto need = [&](std::size_t n) {
    if (opt.formulas.size() != n) {
      throw CLI::ValidationError(
          "query " + opt.query_kind + " takes exactly " + std::to_string(n) +
          (n == 1 ? " formula" : " formulas"));
    }
  };
  if (opt.query_kind == "conditional") {
    need(2);
    const auto verdict = popper::accepts_conditional(
        state, popper::parse_formula(opt.formulas[0]),
        popper::parse_formula(opt.formulas[1]));
    std::cout << (verdict.accepted ? "accepted" : "not accepted")
              << (verdict.coherent ? " (coherent)" : " (incoherent)") << "\n";
  } else if (opt.query_kind == "expects") {
    need(1);
    std::cout << (popper::expects(state, popper::parse_formula(opt.formulas[0]))
                      ? "true"
                      : "false")
              << "\n";
  } else if (opt.query_kind == "believes") {
    need(1);
    std::cout << (popper::fully_believes(
                      state, popper::parse_formula(opt.formulas[0]))
                      ? "true"
                      : "false")
              << "\n";
  } else if (opt.query_kind == "apriori") {
    need(1);
    const popper::Prop ext = popper::extension(
        popper::parse_formula(opt.formulas[0]), state.universe());
    std::cout << (state.is_apriori(ext) ? "true" : "false") << "\n";
  } else {  // nm; kind membership enforced by the parser
    need(2);
    std::cout << (popper::nm_follows(state,
                                     popper::parse_formula(opt.formulas[0]),
                                     popper::parse_formula(opt.formulas[1]))
                      ? "true"
                      : "false")
              << "\n";
  }
  return 0;
}

// Deterministic per-seed proposition pool for the random audit.
std::vector<popper::Prop> random_pool(const popper::EpistemicState& state,
                                      std::uint64_t seed, unsigned pool_size) {
  std::mt19937_64 engine(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<popper::Prop> pool;
  const std::size_t n = state.universe().size();
  for (unsigned i = 0; i < pool_size; ++i) {
    popper::Prop p(n);
    for (std::size_t w = 0; w < n; ++w) {
      if (engine() & 1u) p.add(w);
    }
    pool.push_back(std::move(p));
  }
  return pool;
}

int finish_audit(const popper::AuditReport& report, const Options& opt) {
  if (opt.format == "lines") {
    for (const auto& line : report.to_lines()) std::cout << line << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.passed() ? 0 : kExitAuditFailure;
}

int run_audit(const Options& opt) {
  if (opt.audit_mode == "exhaustive") {
    const unsigned max_worlds = opt.max_worlds == 0 ? 3 : opt.max_worlds;
    return finish_audit(popper::exhaustive_small_space_audit(max_worlds),
                        opt);
  }
  // Random mode: one generated state per seed, fresh pool each.
  popper::GeneratorParams params;
  const unsigned max_worlds = opt.max_worlds == 0 ? 16 : opt.max_worlds;
  unsigned atoms = 1;
  while ((2u << atoms) <= max_worlds && atoms < 16) ++atoms;
  params.max_atoms = atoms;
  popper::AuditReport merged;
  for (std::uint64_t seed = 0; seed < opt.seeds; ++seed) {
    params.seed = seed;
    const popper::EpistemicState state = popper::random_state(params);
    merged.merge(popper::check_axioms(
        state, random_pool(state, seed, opt.pool_size)));
  }
  return finish_audit(merged, opt);
}

int run_examples(const Options& opt) {
  const popper::EpistemicState state = opt.example_name == "kennedy"
                                           ? popper::kennedy_model()
                                           : popper::coin_model(opt.coin_n);
  const std::string path =
      opt.out_path.empty() ? opt.example_name + ".model" : opt.out_path;
  popper::save_model(state, path);
  std::cout << "wrote " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief revision over two-place conditional probability"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "Validate a model file and print its core system");
  check->add_option("model", opt.model_path, "model file")->required();

  std::string eval_b, eval_a;
  auto* eval = app.add_subcommand("eval", "Print the exact rational P(B | A)");
  eval->add_option("model", opt.model_path, "model file")->required();
  eval->add_option("B", eval_b, "consequent formula")->required();
  eval->add_option("A", eval_a, "antecedent formula")->required();

  auto* suppose = app.add_subcommand("suppose", "Suppose formulas in sequence and print the trace");
  suppose->add_option("model", opt.model_path, "model file")->required();
  suppose->add_option("formulas", opt.formulas, "formulas to suppose, in order")
      ->required()
      ->expected(1, -1);

  auto* query = app.add_subcommand("query", "Answer a single query against a model");
  query
      ->add_option("kind", opt.query_kind,
                   "conditional | expects | believes | apriori | nm")
      ->required()
      ->check(CLI::IsMember(
          {"conditional", "expects", "believes", "apriori", "nm"}));
  query->add_option("model", opt.model_path, "model file")->required();
  query->add_option("formulas", opt.formulas, "query formulas")
      ->required()
      ->expected(1, -1);

  auto* audit = app.add_subcommand("audit", "Verify the revision axioms mechanically");
  audit->add_option("mode", opt.audit_mode, "random | exhaustive")
      ->required()
      ->check(CLI::IsMember({"random", "exhaustive"}));
  audit->add_option("--seeds", opt.seeds, "number of generated states (random mode)");
  audit->add_option("--pool-size", opt.pool_size, "propositions per state (random mode)");
  audit->add_option("--max-worlds", opt.max_worlds,
                    "world bound: enumeration cap (exhaustive) or universe cap (random)");
  audit->add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"text", "lines"}));

  auto* examples = app.add_subcommand("examples", "Write a bundled example model file");
  examples->add_option("name", opt.example_name, "kennedy | coin")
      ->required()
      ->check(CLI::IsMember({"kennedy", "coin"}));
  examples->add_option("out", opt.out_path, "output path (default <name>.model)");
  examples->add_option("--n", opt.coin_n, "coin truncation depth (coin only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsageError;
  }

  try {
    if (app.got_subcommand(check)) return run_check(opt);
    if (app.got_subcommand(eval)) {
      opt.formulas = {eval_b, eval_a};
      return run_eval(opt);
    }
    if (app.got_subcommand(suppose)) return run_suppose(opt);
    if (app.got_subcommand(query)) return run_query(opt);
    if (app.got_subcommand(audit)) return run_audit(opt);
    if (app.got_subcommand(examples)) return run_examples(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const popper::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return 0;
}
