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

// Production-rule inventory of the paired grammar. Structural rules expand a
// non-terminal identically on both sides of the equivalence; law rules expand
// it into the two sides of an equivalence law.

#ifndef QGEN_GRAMMAR_HPP_
#define QGEN_GRAMMAR_HPP_

#include <algorithm>
#include <array>
#include <cassert>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/logic.hpp"

namespace qgen {

// A formula skeleton whose leaves are either holes of type `Hole` or truth
// constants. Laws are written with slot holes; instantiated laws hold
// non-terminal instance ids.
template <typename Hole>
struct Term {
  enum class Kind { kHole, kConst, kOp };

  Kind kind = Kind::kConst;
  Hole hole{};
  bool value = false;
  OpKind op = OpKind::kNot;
  std::vector<Term> children;

  static Term of_hole(Hole h) {
    Term t;
    t.kind = Kind::kHole;
    t.hole = h;
    return t;
  }
  static Term of_const(bool v) {
    Term t;
    t.kind = Kind::kConst;
    t.value = v;
    return t;
  }
  static Term of_op(OpKind op, std::vector<Term> children) {
    assert(children.size() == (is_binary(op) ? 2U : 1U));
    Term t;
    t.kind = Kind::kOp;
    t.op = op;
    t.children = std::move(children);
    return t;
  }

  friend bool operator==(const Term&, const Term&) = default;
};

// Rebuilds `term` with every hole replaced by `f(hole)`.
template <typename Hole, typename F>
auto map_holes(const Term<Hole>& term, F&& f)
    -> Term<std::decay_t<decltype(f(term.hole))>> {
  using Out = Term<std::decay_t<decltype(f(term.hole))>>;
  switch (term.kind) {
    case Term<Hole>::Kind::kHole:
      return Out::of_hole(f(term.hole));
    case Term<Hole>::Kind::kConst:
      return Out::of_const(term.value);
    case Term<Hole>::Kind::kOp: {
      std::vector<Out> children;
      children.reserve(term.children.size());
      for (const auto& c : term.children) children.push_back(map_holes(c, f));
      return Out::of_op(term.op, std::move(children));
    }
  }
  return Out{};
}

// Visits holes left to right, once per occurrence.
template <typename Hole, typename F>
void for_each_hole(const Term<Hole>& term, F&& f) {
  if (term.kind == Term<Hole>::Kind::kHole) {
    f(term.hole);
    return;
  }
  for (const auto& c : term.children) for_each_hole(c, f);
}

// Converts a skeleton to a Proposition, mapping holes through `f`.
template <typename Hole, typename F>
Proposition to_proposition(const Term<Hole>& term, F&& f) {
  switch (term.kind) {
    case Term<Hole>::Kind::kHole:
      return f(term.hole);
    case Term<Hole>::Kind::kConst:
      return Proposition::constant(term.value);
    case Term<Hole>::Kind::kOp:
      if (term.op == OpKind::kNot) return neg(to_proposition(term.children[0], f));
      return Proposition::binary(term.op, to_proposition(term.children[0], f),
                                 to_proposition(term.children[1], f));
  }
  return top();
}

// Pattern slots j, k, l.
enum class Slot { kJ = 0, kK = 1, kL = 2 };

constexpr std::string_view slot_name(Slot s) {
  switch (s) {
    case Slot::kJ:
      return "j";
    case Slot::kK:
      return "k";
    case Slot::kL:
      return "l";
  }
  return "?";
}

using Pattern = Term<Slot>;

// ---------------------------------------------------------------------------
// Structural rules

enum class StructuralKind { kLiteral, kAnd, kOr, kImplies, kNot };

constexpr int kStructuralRuleCount = 5;

constexpr std::array<StructuralKind, kStructuralRuleCount> kStructuralRules = {
    StructuralKind::kLiteral, StructuralKind::kAnd, StructuralKind::kOr,
    StructuralKind::kImplies, StructuralKind::kNot};

constexpr std::string_view structural_name(StructuralKind kind) {
  switch (kind) {
    case StructuralKind::kLiteral:
      return "Literal";
    case StructuralKind::kAnd:
      return "And";
    case StructuralKind::kOr:
      return "Or";
    case StructuralKind::kImplies:
      return "Implies";
    case StructuralKind::kNot:
      return "Not";
  }
  return "?";
}

inline std::optional<StructuralKind> structural_from_name(
    std::string_view name) {
  for (StructuralKind k : kStructuralRules) {
    if (structural_name(k) == name) return k;
  }
  return std::nullopt;
}

// Connective introduced by a non-literal structural rule.
constexpr OpKind structural_op(StructuralKind kind) {
  switch (kind) {
    case StructuralKind::kAnd:
      return OpKind::kAnd;
    case StructuralKind::kOr:
      return OpKind::kOr;
    case StructuralKind::kImplies:
      return OpKind::kImplies;
    case StructuralKind::kNot:
    case StructuralKind::kLiteral:
      break;
  }
  return OpKind::kNot;
}

// ---------------------------------------------------------------------------
// Law rules

enum class Category { kEasy = 0, kMedian = 1, kHard = 2 };

constexpr int kCategoryCount = 3;

constexpr std::string_view category_name(Category c) {
  switch (c) {
    case Category::kEasy:
      return "easy";
    case Category::kMedian:
      return "median";
    case Category::kHard:
      return "hard";
  }
  return "?";
}

inline std::optional<Category> category_from_name(std::string_view name) {
  for (Category c : {Category::kEasy, Category::kMedian, Category::kHard}) {
    if (category_name(c) == name) return c;
  }
  return std::nullopt;
}

enum class LawFamily {
  kIdentity,
  kDomination,
  kCommutative,
  kIdempotent,
  kNegation,
  kAbsorption,
  kAssociative,
  kDeMorgan,
  kDoubleNegation,
  kDistributive,
};

constexpr std::string_view family_name(LawFamily f) {
  switch (f) {
    case LawFamily::kIdentity:
      return "Identity";
    case LawFamily::kDomination:
      return "Domination";
    case LawFamily::kCommutative:
      return "Commutative";
    case LawFamily::kIdempotent:
      return "Idempotent";
    case LawFamily::kNegation:
      return "Negation";
    case LawFamily::kAbsorption:
      return "Absorption";
    case LawFamily::kAssociative:
      return "Associative";
    case LawFamily::kDeMorgan:
      return "De Morgan";
    case LawFamily::kDoubleNegation:
      return "Double Negation";
    case LawFamily::kDistributive:
      return "Distributive";
  }
  return "?";
}

constexpr Category category_of(LawFamily f) {
  switch (f) {
    case LawFamily::kIdentity:
    case LawFamily::kDoubleNegation:
    case LawFamily::kDomination:
      return Category::kEasy;
    case LawFamily::kDeMorgan:
    case LawFamily::kDistributive:
    case LawFamily::kIdempotent:
    case LawFamily::kNegation:
      return Category::kMedian;
    case LawFamily::kAbsorption:
    case LawFamily::kCommutative:
    case LawFamily::kAssociative:
      return Category::kHard;
  }
  return Category::kHard;
}

// Operand swaps are too easy on their own and must be followed immediately by
// one of the follow-up laws below.
constexpr bool is_swap(LawFamily f) {
  return f == LawFamily::kCommutative || f == LawFamily::kAssociative;
}

constexpr bool is_follow_up(LawFamily f) {
  return f == LawFamily::kAbsorption || f == LawFamily::kIdempotent ||
         f == LawFamily::kDoubleNegation || f == LawFamily::kIdentity;
}

struct LawRule {
  int id = 0;
  LawFamily family = LawFamily::kIdentity;
  std::string name;
  Pattern gamma1;  // left side
  Pattern gamma2;  // right side

  Category category() const { return category_of(family); }

  // Distinct slots in first-occurrence order of gamma1.
  std::vector<Slot> slots() const {
    std::vector<Slot> out;
    for_each_hole(gamma1, [&](Slot s) {
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    });
    return out;
  }
};

inline Category category_of(const LawRule& rule) { return rule.category(); }

constexpr int kLawRuleCount = 19;

namespace detail {

inline Pattern j() { return Pattern::of_hole(Slot::kJ); }
inline Pattern k() { return Pattern::of_hole(Slot::kK); }
inline Pattern l() { return Pattern::of_hole(Slot::kL); }
inline Pattern t() { return Pattern::of_const(true); }
inline Pattern f() { return Pattern::of_const(false); }
inline Pattern p_not(Pattern a) { return Pattern::of_op(OpKind::kNot, {a}); }
inline Pattern p_and(Pattern a, Pattern b) {
  return Pattern::of_op(OpKind::kAnd, {a, b});
}
inline Pattern p_or(Pattern a, Pattern b) {
  return Pattern::of_op(OpKind::kOr, {a, b});
}

inline std::vector<LawRule> build_law_table() {
  using F = LawFamily;
  std::vector<LawRule> laws = {
      {0, F::kCommutative, "Commutative-∧", p_and(j(), k()), p_and(k(), j())},
      {1, F::kIdentity, "Identity-∧", p_and(j(), t()), j()},
      {2, F::kIdentity, "Identity-∨", p_or(j(), f()), j()},
      {3, F::kDomination, "Domination-∧", p_and(j(), f()), f()},
      {4, F::kDomination, "Domination-∨", p_or(j(), t()), t()},
      {5, F::kNegation, "Negation-∧", p_and(j(), p_not(j())), f()},
      {6, F::kNegation, "Negation-∨", p_or(j(), p_not(j())), t()},
      {7, F::kCommutative, "Commutative-∨", p_or(j(), k()), p_or(k(), j())},
      {8, F::kIdempotent, "Idempotent-∧", p_and(j(), j()), j()},
      {9, F::kIdempotent, "Idempotent-∨", p_or(j(), j()), j()},
      {10, F::kAbsorption, "Absorption-∨", p_or(j(), p_and(j(), k())), j()},
      {11, F::kAbsorption, "Absorption-∧", p_and(j(), p_or(j(), k())), j()},
      // Flat operand swap, read with the parser's left associativity.
      {12, F::kAssociative, "Associative-∧", p_and(p_and(j(), k()), l()),
       p_and(p_and(k(), j()), l())},
      {13, F::kAssociative, "Associative-∨", p_or(p_or(j(), k()), l()),
       p_or(p_or(k(), j()), l())},
      {14, F::kDeMorgan, "De Morgan-∧", p_not(p_and(j(), k())),
       p_or(p_not(j()), p_not(k()))},
      {15, F::kDeMorgan, "De Morgan-∨", p_not(p_or(j(), k())),
       p_and(p_not(j()), p_not(k()))},
      {16, F::kDoubleNegation, "Double Negation", p_not(p_not(j())), j()},
      {17, F::kDistributive, "Distributive-∧", p_and(j(), p_or(k(), l())),
       p_or(p_and(j(), k()), p_and(j(), l()))},
      {18, F::kDistributive, "Distributive-∨", p_or(j(), p_and(k(), l())),
       p_and(p_or(j(), k()), p_or(j(), l()))},
  };
  return laws;
}

}  // namespace detail

// The law rules in their canonical listing order; `id` is the index.
inline const std::vector<LawRule>& law_table() {
  static const std::vector<LawRule> table = detail::build_law_table();
  return table;
}

inline const LawRule* law_by_name(std::string_view name) {
  for (const LawRule& r : law_table()) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

// Instantiates a pattern with distinct variables p, q, r for j, k, l.
inline Proposition instantiate_fresh(const Pattern& pattern) {
  return to_proposition(pattern, [](Slot s) {
    static constexpr std::string_view kNames[] = {"p", "q", "r"};
    return var(std::string(kNames[static_cast<int>(s)]));
  });
}

// Maps a digit in [0,15] onto one of `family_size` rules by splitting the
// digit range into equal buckets: the smallest order o with
// (16 / family_size) * (o + 1) > digit.
constexpr int select_rule(int digit, int family_size) {
  return digit * family_size / 16;
}

// A permutation assigning each rule of a family its selection order.
class RuleOrdering {
 public:
  explicit RuleOrdering(int size) : rule_at_(static_cast<std::size_t>(size)) {
    for (int i = 0; i < size; ++i) rule_at_[i] = i;
  }

  // `rule_at[o]` is the rule id selected by order o.
  static std::optional<RuleOrdering> from_permutation(std::vector<int> rule_at) {
    std::vector<int> sorted = rule_at;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i)) return std::nullopt;
    }
    RuleOrdering o(0);
    o.rule_at_ = std::move(rule_at);
    return o;
  }

  int size() const { return static_cast<int>(rule_at_.size()); }
  int rule_at(int order) const { return rule_at_.at(order); }
  int order_of(int rule) const {
    return static_cast<int>(
        std::find(rule_at_.begin(), rule_at_.end(), rule) - rule_at_.begin());
  }
  const std::vector<int>& permutation() const { return rule_at_; }
  bool is_identity() const {
    for (int i = 0; i < size(); ++i) {
      if (rule_at_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const RuleOrdering&, const RuleOrdering&) = default;

 private:
  std::vector<int> rule_at_;
};

}  // namespace qgen

#endif  // QGEN_GRAMMAR_HPP_
