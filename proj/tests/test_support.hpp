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

// Test-only generators and oracles. Nothing here calls into the code paths
// it is used to check.

#ifndef QGEN_TESTS_TEST_SUPPORT_HPP_
#define QGEN_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/logic.hpp"

namespace qgen::testing {

// Random formula of height at most `max_depth` over p..s, T, F and all five
// connectives.
inline Proposition random_proposition(std::mt19937_64& rng, int max_depth,
                                      bool allow_iff = true) {
  std::uniform_int_distribution<int> pick(0, max_depth <= 0 ? 5 : 11);
  const int k = pick(rng);
  static const char* kNames[] = {"p", "q", "r", "s"};
  if (k < 4) return var(kNames[k]);
  if (k == 4) return top();
  if (k == 5) return bottom();
  switch (k) {
    case 6:
    case 7:
      return neg(random_proposition(rng, max_depth - 1, allow_iff));
    case 8:
      return conj(random_proposition(rng, max_depth - 1, allow_iff),
                  random_proposition(rng, max_depth - 1, allow_iff));
    case 9:
      return disj(random_proposition(rng, max_depth - 1, allow_iff),
                  random_proposition(rng, max_depth - 1, allow_iff));
    case 10:
      return implies(random_proposition(rng, max_depth - 1, allow_iff),
                     random_proposition(rng, max_depth - 1, allow_iff));
    default:
      if (allow_iff) {
        return iff(random_proposition(rng, max_depth - 1, allow_iff),
                   random_proposition(rng, max_depth - 1, allow_iff));
      }
      return conj(random_proposition(rng, max_depth - 1, allow_iff),
                  random_proposition(rng, max_depth - 1, allow_iff));
  }
}

inline int height(const Proposition& p) {
  switch (p.kind()) {
    case Proposition::Kind::kConst:
    case Proposition::Kind::kVar:
      return 0;
    case Proposition::Kind::kNot:
      return 1 + height(p.child());
    case Proposition::Kind::kBinary:
      return 1 + std::max(height(p.left()), height(p.right()));
  }
  return 0;
}

// Reference truth table: rows TT, TF, FT, FF and the columns ¬P, P∧Q, P∨Q,
// P⊃Q, P↔Q, written out by hand.
struct TruthRow {
  bool p, q;
  std::array<char, 5> cells;  // ¬P, ∧, ∨, implication, ↔
};

inline const std::array<TruthRow, 4>& reference_truth_table() {
  static const std::array<TruthRow, 4> rows = {{
      {true, true, {'F', 'T', 'T', 'T', 'T'}},
      {true, false, {'F', 'F', 'T', 'F', 'F'}},
      {false, true, {'T', 'F', 'T', 'T', 'F'}},
      {false, false, {'T', 'F', 'F', 'T', 'T'}},
  }};
  return rows;
}

// ---------------------------------------------------------------------------
// Case-by-case parenthesization rules, one branch per operand combination.
// `pre` holds binding powers, with leaves at kLeafBindingPower. The branches
// compare with strict inequalities only, so an operand whose pre equals the
// operator's falls through to the final else-branch.

struct Attr {
  std::string exp;
  int pre;
};

// The conjunction production, read with `op` in place of ∧.
inline Attr case_rule_binary(const Attr& j, OpKind op, const Attr& k,
                           std::string_view op_text) {
  const int pre = binding_power(op);
  const std::string o = " " + std::string(op_text) + " ";
  std::string exp;
  if (j.pre < pre && k.pre < pre) {
    exp = "(" + j.exp + ")" + o + "(" + k.exp + ")";
  } else if (j.pre < pre && k.pre > pre) {
    exp = "(" + j.exp + ")" + o + k.exp;
  } else if (j.pre > pre && k.pre < pre) {
    exp = j.exp + o + "(" + k.exp + ")";
  } else {
    exp = j.exp + o + k.exp;
  }
  return {exp, pre};
}

// The same construction for negation.
inline Attr case_rule_not(const Attr& j, std::string_view op_text) {
  const int pre = binding_power(OpKind::kNot);
  if (j.pre < pre) return {std::string(op_text) + "(" + j.exp + ")", pre};
  return {std::string(op_text) + j.exp, pre};
}

// The absorption production E_j ∧ (E_j ∨ E_k); returns the left side.
inline Attr case_rule_absorption(const Attr& j, const Attr& k,
                               std::string_view and_text,
                               std::string_view or_text) {
  const int and_pre = binding_power(OpKind::kAnd);
  const int or_pre = binding_power(OpKind::kOr);
  const std::string a = " " + std::string(and_text) + " ";
  const std::string o = " " + std::string(or_text) + " ";
  const std::string pj = "(" + j.exp + ")";
  const std::string pk = "(" + k.exp + ")";
  std::string exp;
  if (k.pre < or_pre) {
    if (j.pre < or_pre) {
      exp = pj + a + "(" + pj + o + pk + ")";
    } else if (j.pre < and_pre && j.pre > or_pre) {
      exp = pj + a + "(" + j.exp + o + pk + ")";
    } else {
      exp = j.exp + a + "(" + j.exp + o + pk + ")";
    }
  } else {
    if (j.pre < or_pre) {
      exp = pj + a + "(" + pj + o + k.exp + ")";
    } else if (j.pre < and_pre && j.pre > or_pre) {
      exp = pj + a + "(" + j.exp + o + k.exp + ")";
    } else {
      exp = j.exp + a + "(" + j.exp + o + k.exp + ")";
    }
  }
  return {exp, and_pre};
}

// Whether any of the case comparisons at this node is an equality.
inline bool is_tie(const Proposition& p) {
  switch (p.kind()) {
    case Proposition::Kind::kNot:
      return p.child().binding_power() == binding_power(OpKind::kNot);
    case Proposition::Kind::kBinary:
      return p.left().binding_power() == binding_power(p.op()) ||
             p.right().binding_power() == binding_power(p.op());
    default:
      return false;
  }
}

// Renders a tree bottom-up through the case rules. `ties` counts tie nodes.
inline Attr case_rule_render(const Proposition& p, Syntax syntax, int& ties) {
  switch (p.kind()) {
    case Proposition::Kind::kConst:
      return {p.value() ? "T" : "F", kLeafBindingPower};
    case Proposition::Kind::kVar:
      return {p.name(), kLeafBindingPower};
    case Proposition::Kind::kNot:
      ties += is_tie(p);
      return case_rule_not(case_rule_render(p.child(), syntax, ties),
                         operator_text(OpKind::kNot, syntax));
    case Proposition::Kind::kBinary: {
      ties += is_tie(p);
      const Attr l = case_rule_render(p.left(), syntax, ties);
      const Attr r = case_rule_render(p.right(), syntax, ties);
      return case_rule_binary(l, p.op(), r, operator_text(p.op(), syntax));
    }
  }
  return {};
}

}  // namespace qgen::testing

#endif  // QGEN_TESTS_TEST_SUPPORT_HPP_
