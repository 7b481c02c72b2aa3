#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "popper/errors.hpp"

namespace popper {

// Immutable propositional formula over named atoms. Connectives:
//   ~ (negation), & (conjunction), | (disjunction), -> (implication,
//   right-associative), <-> (biconditional, right-associative),
//   T / F (constants). Precedence: ~ > & > | > -> > <->.
//
// Values are cheap shared handles to an immutable AST; safe to copy and to
// share across threads.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Implies, Iff };

  static Formula constant(bool value);
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  // Valid for Kind::Atom only.
  const std::string& atom_name() const { return node_->atom; }
  // Valid for Not/And/Or/Implies/Iff (Not uses lhs only).
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  // Structural AST equality.
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node {
    Kind kind;
    std::string atom;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Recursive-descent parser for the grammar above. Whitespace is
// insignificant; atoms are identifiers (letter, then letters/digits/underscore);
// the identifiers T and F are reserved for the constants.
// Throws ParseError with position and expected-token set on malformed input.
Formula parse_formula(std::string_view text);

// Fully parenthesized canonical text; parse_formula(format_formula(f)) == f.
std::string format_formula(const Formula& f);

// Classical truth evaluation against a total valuation.
// Throws UnknownAtomError when the formula mentions an undeclared atom.
bool eval_valuation(const Formula& f,
                    const std::map<std::string, bool>& valuation);

}  // namespace popper
