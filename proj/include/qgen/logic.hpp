/*
 * Copyright 2026 The qgen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Propositional syntax and semantics: the Proposition tree, evaluation, the
// truth-table equivalence oracle, a text parser and a minimal-parentheses
// renderer.

#ifndef QGEN_LOGIC_HPP_
#define QGEN_LOGIC_HPP_

#include <algorithm>
#include <cassert>
#include <cctype>
#include <climits>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgen/error.hpp"

namespace qgen {

enum class OpKind { kNot, kAnd, kOr, kImplies, kIff };

// Textbook precedence table: a smaller value binds tighter.
constexpr int precedence(OpKind op) {
  switch (op) {
    case OpKind::kNot:
      return 1;
    case OpKind::kAnd:
      return 2;
    case OpKind::kOr:
      return 3;
    case OpKind::kImplies:
      return 4;
    case OpKind::kIff:
      return 5;
  }
  return 0;
}

// Inverted scale used by every parenthesization comparison: larger binds
// tighter. Variables and constants sit at kLeafBindingPower.
constexpr int binding_power(OpKind op) { return 6 - precedence(op); }

constexpr int kLeafBindingPower = INT_MAX;

constexpr bool is_binary(OpKind op) { return op != OpKind::kNot; }

// AND/OR chains parse left-associative, IMPLIES/IFF right-associative.
constexpr bool is_left_associative(OpKind op) {
  return op == OpKind::kAnd || op == OpKind::kOr;
}

enum class Syntax { kUnicode, kAscii, kLatex };

// Immutable propositional formula. Copies share structure.
class Proposition {
 public:
  enum class Kind { kConst, kVar, kNot, kBinary };

  static Proposition constant(bool value);
  static Proposition var(std::string name);
  static Proposition negation(Proposition child);
  static Proposition binary(OpKind op, Proposition left, Proposition right);

  Kind kind() const;
  bool is_leaf() const {
    return kind() == Kind::kConst || kind() == Kind::kVar;
  }
  bool value() const;
  const std::string& name() const;
  // kNot for negations, the connective for binary nodes.
  OpKind op() const;
  const Proposition& child() const;
  const Proposition& left() const;
  const Proposition& right() const;

  int binding_power() const {
    return is_leaf() ? kLeafBindingPower : qgen::binding_power(op());
  }

  // Structural equality.
  friend bool operator==(const Proposition& a, const Proposition& b);

 private:
  struct Node;
  explicit Proposition(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Proposition::Node {
  Kind kind = Kind::kConst;
  bool value = false;
  std::string name;
  OpKind op = OpKind::kNot;
  std::vector<Proposition> children;
};

inline Proposition Proposition::constant(bool value) {
  return Proposition(std::make_shared<const Node>(
      Node{Kind::kConst, value, {}, OpKind::kNot, {}}));
}

inline Proposition Proposition::var(std::string name) {
  return Proposition(std::make_shared<const Node>(
      Node{Kind::kVar, false, std::move(name), OpKind::kNot, {}}));
}

inline Proposition Proposition::negation(Proposition child) {
  return Proposition(std::make_shared<const Node>(
      Node{Kind::kNot, false, {}, OpKind::kNot, {std::move(child)}}));
}

inline Proposition Proposition::binary(OpKind op, Proposition left,
                                       Proposition right) {
  assert(is_binary(op));
  return Proposition(std::make_shared<const Node>(Node{
      Kind::kBinary, false, {}, op, {std::move(left), std::move(right)}}));
}

inline Proposition::Kind Proposition::kind() const { return node_->kind; }
inline bool Proposition::value() const { return node_->value; }
inline const std::string& Proposition::name() const { return node_->name; }
inline OpKind Proposition::op() const { return node_->op; }
inline const Proposition& Proposition::child() const {
  return node_->children.at(0);
}
inline const Proposition& Proposition::left() const {
  return node_->children.at(0);
}
inline const Proposition& Proposition::right() const {
  return node_->children.at(1);
}

inline bool operator==(const Proposition& a, const Proposition& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Proposition::Kind::kConst:
      return a.value() == b.value();
    case Proposition::Kind::kVar:
      return a.name() == b.name();
    case Proposition::Kind::kNot:
      return a.child() == b.child();
    case Proposition::Kind::kBinary:
      return a.op() == b.op() && a.left() == b.left() &&
             a.right() == b.right();
  }
  return false;
}

// Short constructors, mostly for tests and pattern instantiation.
inline Proposition top() { return Proposition::constant(true); }
inline Proposition bottom() { return Proposition::constant(false); }
inline Proposition var(std::string name) {
  return Proposition::var(std::move(name));
}
inline Proposition neg(Proposition p) {
  return Proposition::negation(std::move(p));
}
inline Proposition conj(Proposition a, Proposition b) {
  return Proposition::binary(OpKind::kAnd, std::move(a), std::move(b));
}
inline Proposition disj(Proposition a, Proposition b) {
  return Proposition::binary(OpKind::kOr, std::move(a), std::move(b));
}
inline Proposition implies(Proposition a, Proposition b) {
  return Proposition::binary(OpKind::kImplies, std::move(a), std::move(b));
}
inline Proposition iff(Proposition a, Proposition b) {
  return Proposition::binary(OpKind::kIff, std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Semantics

using Assignment = std::map<std::string, bool, std::less<>>;

constexpr bool apply_binary(OpKind op, bool a, bool b) {
  switch (op) {
    case OpKind::kAnd:
      return a && b;
    case OpKind::kOr:
      return a || b;
    case OpKind::kImplies:
      return !a || b;
    case OpKind::kIff:
      return a == b;
    case OpKind::kNot:
      break;
  }
  return false;
}

inline bool eval(const Proposition& prop, const Assignment& assignment) {
  switch (prop.kind()) {
    case Proposition::Kind::kConst:
      return prop.value();
    case Proposition::Kind::kVar: {
      auto it = assignment.find(prop.name());
      if (it == assignment.end()) throw EvalError(prop.name());
      return it->second;
    }
    case Proposition::Kind::kNot:
      return !eval(prop.child(), assignment);
    case Proposition::Kind::kBinary:
      return apply_binary(prop.op(), eval(prop.left(), assignment),
                          eval(prop.right(), assignment));
  }
  return false;
}

namespace detail {

inline void collect_variables(const Proposition& prop,
                              std::vector<std::string>& out) {
  switch (prop.kind()) {
    case Proposition::Kind::kConst:
      return;
    case Proposition::Kind::kVar:
      if (std::find(out.begin(), out.end(), prop.name()) == out.end()) {
        out.push_back(prop.name());
      }
      return;
    case Proposition::Kind::kNot:
      collect_variables(prop.child(), out);
      return;
    case Proposition::Kind::kBinary:
      collect_variables(prop.left(), out);
      collect_variables(prop.right(), out);
      return;
  }
}

// Postfix program over variable indices; evaluating it per row avoids the
// name lookups of eval().
class TruthProgram {
 public:
  TruthProgram(const Proposition& prop, const std::vector<std::string>& vars) {
    compile(prop, vars);
  }

  bool run(std::uint64_t row, std::vector<char>& stack) const {
    stack.clear();
    for (const Instr& in : code_) {
      switch (in.kind) {
        case Instr::kConst:
          stack.push_back(static_cast<char>(in.arg));
          break;
        case Instr::kVar:
          stack.push_back(static_cast<char>((row >> in.arg) & 1U));
          break;
        case Instr::kNot:
          stack.back() = static_cast<char>(!stack.back());
          break;
        case Instr::kBinary: {
          bool b = stack.back() != 0;
          stack.pop_back();
          bool a = stack.back() != 0;
          stack.back() = static_cast<char>(
              apply_binary(static_cast<OpKind>(in.arg), a, b));
          break;
        }
      }
    }
    return stack.back() != 0;
  }

 private:
  struct Instr {
    enum Kind { kConst, kVar, kNot, kBinary } kind;
    int arg;
  };

  void compile(const Proposition& prop, const std::vector<std::string>& vars) {
    switch (prop.kind()) {
      case Proposition::Kind::kConst:
        code_.push_back({Instr::kConst, prop.value() ? 1 : 0});
        return;
      case Proposition::Kind::kVar: {
        auto it = std::find(vars.begin(), vars.end(), prop.name());
        code_.push_back(
            {Instr::kVar, static_cast<int>(std::distance(vars.begin(), it))});
        return;
      }
      case Proposition::Kind::kNot:
        compile(prop.child(), vars);
        code_.push_back({Instr::kNot, 0});
        return;
      case Proposition::Kind::kBinary:
        compile(prop.left(), vars);
        compile(prop.right(), vars);
        code_.push_back({Instr::kBinary, static_cast<int>(prop.op())});
        return;
    }
  }

  std::vector<Instr> code_;
};

}  // namespace detail

// Distinct variable names in first-occurrence, left-to-right order.
inline std::vector<std::string> variables(const Proposition& prop) {
  std::vector<std::string> out;
  detail::collect_variables(prop, out);
  return out;
}

constexpr std::size_t kDefaultVariableLimit = 20;

// Brute-force truth-table check over the union of both variable sets.
inline bool equivalent(const Proposition& a, const Proposition& b,
                       std::size_t variable_limit = kDefaultVariableLimit) {
  std::vector<std::string> vars;
  detail::collect_variables(a, vars);
  detail::collect_variables(b, vars);
  if (vars.size() > variable_limit || vars.size() >= 63) {
    throw ResourceError("equivalence check over " +
                        std::to_string(vars.size()) +
                        " variables exceeds the limit of " +
                        std::to_string(variable_limit));
  }
  detail::TruthProgram pa(a, vars);
  detail::TruthProgram pb(b, vars);
  std::vector<char> stack;
  const std::uint64_t rows = std::uint64_t{1} << vars.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    if (pa.run(row, stack) != pb.run(row, stack)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rendering

// Whether a child with `child_bp` needs parentheses under `op`. Equal power
// is parenthesized only on the side against the operator's associativity, so
// the output always reparses to the same tree.
constexpr bool needs_parens(OpKind op, int child_bp, bool is_left_child) {
  const int op_bp = binding_power(op);
  if (child_bp != op_bp) return child_bp < op_bp;
  if (!is_binary(op)) return false;
  return is_left_associative(op) ? !is_left_child : is_left_child;
}

struct OperatorSpelling {
  std::string_view negation;
  std::string_view conjunction;
  std::string_view disjunction;
  std::string_view implication;
  std::string_view biconditional;
  std::string_view equivalence;
};

constexpr OperatorSpelling spelling(Syntax syntax) {
  switch (syntax) {
    case Syntax::kUnicode:
      return {"¬", "∧", "∨", "⊃", "↔", "≡"};
    case Syntax::kAscii:
      return {"!", "&", "|", "->", "<->", "=="};
    case Syntax::kLatex:
      return {"\\neg ", "\\wedge", "\\vee", "\\to", "\\leftrightarrow",
              "\\equiv"};
  }
  return {};
}

inline std::string_view operator_text(OpKind op, Syntax syntax) {
  const OperatorSpelling s = spelling(syntax);
  switch (op) {
    case OpKind::kNot:
      return s.negation;
    case OpKind::kAnd:
      return s.conjunction;
    case OpKind::kOr:
      return s.disjunction;
    case OpKind::kImplies:
      return s.implication;
    case OpKind::kIff:
      return s.biconditional;
  }
  return {};
}

inline std::string wrap_if(bool parens, std::string text) {
  return parens ? "(" + text + ")" : text;
}

// Text of an operator node given its operands' texts and binding powers.
// Shared by render() and the attribute evaluator.
inline std::string compose_unary(Syntax syntax, const std::string& operand,
                                 int operand_bp) {
  return std::string(operator_text(OpKind::kNot, syntax)) +
         wrap_if(needs_parens(OpKind::kNot, operand_bp, true), operand);
}

inline std::string compose_binary(OpKind op, Syntax syntax,
                                  const std::string& left, int left_bp,
                                  const std::string& right, int right_bp) {
  std::string out = wrap_if(needs_parens(op, left_bp, true), left);
  out += ' ';
  out += operator_text(op, syntax);
  out += ' ';
  out += wrap_if(needs_parens(op, right_bp, false), right);
  return out;
}

inline std::string leaf_text(const Proposition& prop) {
  if (prop.kind() == Proposition::Kind::kVar) return prop.name();
  return prop.value() ? "T" : "F";
}

inline std::string render(const Proposition& prop,
                          Syntax syntax = Syntax::kUnicode) {
  switch (prop.kind()) {
    case Proposition::Kind::kConst:
    case Proposition::Kind::kVar:
      return leaf_text(prop);
    case Proposition::Kind::kNot:
      return compose_unary(syntax, render(prop.child(), syntax),
                           prop.child().binding_power());
    case Proposition::Kind::kBinary:
      return compose_binary(prop.op(), syntax, render(prop.left(), syntax),
                            prop.left().binding_power(),
                            render(prop.right(), syntax),
                            prop.right().binding_power());
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

enum class Tok { kVar, kTrue, kFalse, kNot, kAnd, kOr, kImplies, kIff,
                 kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

inline bool is_ident_start(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9') || c == '_';
}

class Lexer {
 public:
  Lexer(std::string_view text, Syntax syntax) : text_(text), syntax_(syntax) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (pos_ < text_.size() &&
             (text_[pos_] == ' ' || text_[pos_] == '\t' ||
              text_[pos_] == '\n' || text_[pos_] == '\r')) {
        ++pos_;
      }
      if (pos_ >= text_.size()) break;
      out.push_back(next());
    }
    out.push_back({Tok::kEnd, "", text_.size()});
    return out;
  }

 private:
  struct Spelling {
    std::string_view text;
    Tok kind;
  };

  Token next() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') return take(Tok::kLParen, 1);
    if (c == ')') return take(Tok::kRParen, 1);
    if (is_ident_start(c)) {
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      return {Tok::kVar, std::string(text_.substr(start, pos_ - start)),
              start};
    }
    if ((c == 'T' || c == 'F') &&
        (pos_ + 1 >= text_.size() || !is_ident_char(text_[pos_ + 1]))) {
      return take(c == 'T' ? Tok::kTrue : Tok::kFalse, 1);
    }
    for (const Spelling& s : spellings()) {
      if (text_.substr(pos_, s.text.size()) == s.text) {
        // LaTeX commands must not run into a following letter.
        if (s.text.front() == '\\') {
          std::size_t end = pos_ + s.text.size();
          if (end < text_.size() &&
              std::isalpha(static_cast<unsigned char>(text_[end]))) {
            continue;
          }
        }
        return take(s.kind, s.text.size());
      }
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'",
                     start);
  }

  Token take(Tok kind, std::size_t len) {
    Token t{kind, std::string(text_.substr(pos_, len)), pos_};
    pos_ += len;
    return t;
  }

  // Longest spellings first so "<->" wins over "<".
  std::vector<Spelling> spellings() const {
    switch (syntax_) {
      case Syntax::kUnicode:
        return {{"¬", Tok::kNot},     {"∧", Tok::kAnd},
                {"∨", Tok::kOr},      {"⊃", Tok::kImplies},
                {"⊂", Tok::kImplies}, {"↔", Tok::kIff}};
      case Syntax::kAscii:
        return {{"<->", Tok::kIff}, {"->", Tok::kImplies}, {"!", Tok::kNot},
                {"&", Tok::kAnd},   {"|", Tok::kOr}};
      case Syntax::kLatex:
        return {{"\\leftrightarrow", Tok::kIff}, {"\\rightarrow", Tok::kImplies},
                {"\\wedge", Tok::kAnd},         {"\\land", Tok::kAnd},
                {"\\vee", Tok::kOr},            {"\\lor", Tok::kOr},
                {"\\lnot", Tok::kNot},          {"\\neg", Tok::kNot},
                {"\\to", Tok::kImplies}};
    }
    return {};
  }

  std::string_view text_;
  Syntax syntax_;
  std::size_t pos_ = 0;
};

// Precedence climbing over the token list:
//   iff     := implies ('<->' iff)?
//   implies := or ('->' implies)?
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '!' unary | atom
//   atom    := VAR | T | F | '(' iff ')'
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Proposition run() {
    if (peek().kind == Tok::kEnd) throw ParseError("empty expression", 0);
    Proposition p = parse_iff();
    if (peek().kind != Tok::kEnd) {
      throw ParseError(peek().kind == Tok::kRParen
                           ? "unbalanced ')'"
                           : "trailing input '" + peek().text + "'",
                       peek().pos);
    }
    return p;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }

  Proposition parse_iff() {
    Proposition left = parse_implies();
    if (peek().kind == Tok::kIff) {
      advance();
      return iff(std::move(left), parse_iff());
    }
    return left;
  }

  Proposition parse_implies() {
    Proposition left = parse_or();
    if (peek().kind == Tok::kImplies) {
      advance();
      return implies(std::move(left), parse_implies());
    }
    return left;
  }

  Proposition parse_or() {
    Proposition left = parse_and();
    while (peek().kind == Tok::kOr) {
      advance();
      left = disj(std::move(left), parse_and());
    }
    return left;
  }

  Proposition parse_and() {
    Proposition left = parse_unary();
    while (peek().kind == Tok::kAnd) {
      advance();
      left = conj(std::move(left), parse_unary());
    }
    return left;
  }

  Proposition parse_unary() {
    if (peek().kind == Tok::kNot) {
      advance();
      return neg(parse_unary());
    }
    return parse_atom();
  }

  Proposition parse_atom() {
    const Token& t = advance();
    switch (t.kind) {
      case Tok::kVar:
        return var(t.text);
      case Tok::kTrue:
        return top();
      case Tok::kFalse:
        return bottom();
      case Tok::kLParen: {
        Proposition inner = parse_iff();
        if (peek().kind != Tok::kRParen) {
          throw ParseError(peek().kind == Tok::kEnd
                               ? "unbalanced '('"
                               : "expected ')' but found '" + peek().text + "'",
                           peek().kind == Tok::kEnd ? t.pos : peek().pos);
        }
        advance();
        return inner;
      }
      case Tok::kEnd:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace detail

inline Proposition parse(std::string_view text,
                         Syntax syntax = Syntax::kUnicode) {
  return detail::Parser(detail::Lexer(text, syntax).run()).run();
}

}  // namespace qgen

#endif  // QGEN_LOGIC_HPP_
