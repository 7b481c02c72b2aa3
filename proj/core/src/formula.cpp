#include "popper/formula.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace popper {

namespace {

std::shared_ptr<const Formula> box(Formula f) {
  return std::make_shared<const Formula>(std::move(f));
}

}  // namespace

Formula Formula::constant(bool value) {
  return Formula(std::make_shared<Node>(
      Node{value ? Kind::True : Kind::False, {}, nullptr, nullptr}));
}

Formula Formula::atom(std::string name) {
  return Formula(
      std::make_shared<Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Not, {}, box(std::move(operand)), nullptr}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(
      Node{Kind::And, {}, box(std::move(lhs)), box(std::move(rhs))}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Or, {}, box(std::move(lhs)), box(std::move(rhs))}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Implies, {}, box(std::move(lhs)), box(std::move(rhs))}));
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Iff, {}, box(std::move(lhs)), box(std::move(rhs))}));
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Atom:
      return node_->atom == other.node_->atom;
    case Kind::Not:
      return lhs() == other.lhs();
    default:
      return lhs() == other.lhs() && rhs() == other.rhs();
  }
}

namespace {

enum class Tok { Atom, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

const char* token_name(Tok t) {
  switch (t) {
    case Tok::Atom: return "atom";
    case Tok::True: return "'T'";
    case Tok::False: return "'F'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '(') { out.push_back({Tok::LParen, "(", i++}); continue; }
      if (c == ')') { out.push_back({Tok::RParen, ")", i++}); continue; }
      if (c == '~') { out.push_back({Tok::Not, "~", i++}); continue; }
      if (c == '&') { out.push_back({Tok::And, "&", i++}); continue; }
      if (c == '|') { out.push_back({Tok::Or, "|", i++}); continue; }
      if (c == '-') {
        if (i + 1 < text_.size() && text_[i + 1] == '>') {
          out.push_back({Tok::Implies, "->", i});
          i += 2;
          continue;
        }
        throw ParseError(i, {"'->'"}, "expected '->' at position " +
                                          std::to_string(i));
      }
      if (c == '<') {
        if (i + 2 < text_.size() && text_[i + 1] == '-' && text_[i + 2] == '>') {
          out.push_back({Tok::Iff, "<->", i});
          i += 3;
          continue;
        }
        throw ParseError(i, {"'<->'"}, "expected '<->' at position " +
                                           std::to_string(i));
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = i;
        while (i < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i])) ||
                text_[i] == '_')) {
          ++i;
        }
        std::string word(text_.substr(start, i - start));
        if (word == "T") {
          out.push_back({Tok::True, word, start});
        } else if (word == "F") {
          out.push_back({Tok::False, word, start});
        } else {
          out.push_back({Tok::Atom, word, start});
        }
        continue;
      }
      throw ParseError(i, {"atom", "'~'", "'('", "'T'", "'F'"},
                       std::string("unexpected character '") + c +
                           "' at position " + std::to_string(i));
    }
    out.push_back({Tok::End, "", text_.size()});
    return out;
  }

 private:
  std::string_view text_;
};

// Grammar (right recursion for -> and <->, left folds for & and |):
//   iff   := imp ('<->' iff)?
//   imp   := or  ('->' imp)?
//   or    := and ('|' and)*
//   and   := unary ('&' unary)*
//   unary := '~' unary | '(' iff ')' | atom | 'T' | 'F'
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = parse_iff();
    expect(Tok::End);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  Token advance() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(Tok kind) {
    if (!accept(kind)) {
      fail({token_name(kind)});
    }
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    const Token& t = peek();
    std::string msg = "syntax error at position " + std::to_string(t.pos) +
                      ": unexpected " + token_name(t.kind) + ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += " or ";
      msg += expected[i];
    }
    throw ParseError(t.pos, std::move(expected), msg);
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    if (accept(Tok::Iff)) {
      return Formula::biconditional(std::move(lhs), parse_iff());
    }
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (accept(Tok::Implies)) {
      return Formula::implication(std::move(lhs), parse_imp());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept(Tok::Or)) {
      lhs = Formula::disjunction(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept(Tok::And)) {
      lhs = Formula::conjunction(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        advance();
        return Formula::negation(parse_unary());
      case Tok::LParen: {
        advance();
        Formula inner = parse_iff();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Atom:
        return Formula::atom(advance().text);
      case Tok::True:
        advance();
        return Formula::constant(true);
      case Tok::False:
        advance();
        return Formula::constant(false);
      default:
        fail({"atom", "'~'", "'('", "'T'", "'F'"});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  if (text.empty()) {
    throw ParseError(0, {"atom", "'~'", "'('", "'T'", "'F'"},
                     "empty formula");
  }
  return Parser(Lexer(text).run()).run();
}

std::string format_formula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return "T";
    case Formula::Kind::False:
      return "F";
    case Formula::Kind::Atom:
      return f.atom_name();
    case Formula::Kind::Not:
      return "~" + format_formula(f.lhs());
    case Formula::Kind::And:
      return "(" + format_formula(f.lhs()) + " & " + format_formula(f.rhs()) + ")";
    case Formula::Kind::Or:
      return "(" + format_formula(f.lhs()) + " | " + format_formula(f.rhs()) + ")";
    case Formula::Kind::Implies:
      return "(" + format_formula(f.lhs()) + " -> " + format_formula(f.rhs()) + ")";
    case Formula::Kind::Iff:
      return "(" + format_formula(f.lhs()) + " <-> " + format_formula(f.rhs()) + ")";
  }
  throw Error("corrupt formula node");
}

bool eval_valuation(const Formula& f,
                    const std::map<std::string, bool>& valuation) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom: {
      auto it = valuation.find(f.atom_name());
      if (it == valuation.end()) {
        throw UnknownAtomError(f.atom_name());
      }
      return it->second;
    }
    case Formula::Kind::Not:
      return !eval_valuation(f.lhs(), valuation);
    case Formula::Kind::And:
      return eval_valuation(f.lhs(), valuation) &&
             eval_valuation(f.rhs(), valuation);
    case Formula::Kind::Or:
      return eval_valuation(f.lhs(), valuation) ||
             eval_valuation(f.rhs(), valuation);
    case Formula::Kind::Implies:
      return !eval_valuation(f.lhs(), valuation) ||
             eval_valuation(f.rhs(), valuation);
    case Formula::Kind::Iff:
      return eval_valuation(f.lhs(), valuation) ==
             eval_valuation(f.rhs(), valuation);
  }
  throw Error("corrupt formula node");
}

}  // namespace popper
