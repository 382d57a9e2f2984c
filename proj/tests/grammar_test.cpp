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


#include "qgen/grammar.hpp"

#include <gtest/gtest.h>

#include <map>
#include <string>

namespace qgen {
namespace {

// Every law exactly as a textbook prints it, with p, q, r for the slots.
const std::map<std::string, std::pair<std::string, std::string>>&
textbook_laws() {
  static const std::map<std::string, std::pair<std::string, std::string>> m = {
      {"Commutative-∧", {"p & q", "q & p"}},
      {"Commutative-∨", {"p | q", "q | p"}},
      {"Identity-∧", {"p & T", "p"}},
      {"Identity-∨", {"p | F", "p"}},
      {"Domination-∧", {"p & F", "F"}},
      {"Domination-∨", {"p | T", "T"}},
      {"Negation-∧", {"p & !p", "F"}},
      {"Negation-∨", {"p | !p", "T"}},
      {"Idempotent-∧", {"p & p", "p"}},
      {"Idempotent-∨", {"p | p", "p"}},
      {"Absorption-∨", {"p | (p & q)", "p"}},
      {"Absorption-∧", {"p & (p | q)", "p"}},
      {"Associative-∧", {"(p & q) & r", "(q & p) & r"}},
      {"Associative-∨", {"(p | q) | r", "(q | p) | r"}},
      {"De Morgan-∧", {"!(p & q)", "!p | !q"}},
      {"De Morgan-∨", {"!(p | q)", "!p & !q"}},
      {"Double Negation", {"!!p", "p"}},
      {"Distributive-∧", {"p & (q | r)", "(p & q) | (p & r)"}},
      {"Distributive-∨", {"p | (q & r)", "(p | q) & (p | r)"}},
  };
  return m;
}

bool brute_force_equal(const Proposition& a, const Proposition& b) {
  for (int row = 0; row < 8; ++row) {
    Assignment v{{"p", (row & 1) != 0}, {"q", (row & 2) != 0},
                 {"r", (row & 4) != 0}};
    if (eval(a, v) != eval(b, v)) return false;
  }
  return true;
}

TEST(LawTable, MatchesTextbookForms) {
  ASSERT_EQ(law_table().size(), static_cast<std::size_t>(kLawRuleCount));
  for (const LawRule& law : law_table()) {
    auto it = textbook_laws().find(law.name);
    ASSERT_NE(it, textbook_laws().end()) << law.name;
    EXPECT_EQ(instantiate_fresh(law.gamma1), parse(it->second.first, Syntax::kAscii))
        << law.name;
    EXPECT_EQ(instantiate_fresh(law.gamma2), parse(it->second.second, Syntax::kAscii))
        << law.name;
  }
}

TEST(LawTable, EveryLawIsSound) {
  for (const LawRule& law : law_table()) {
    EXPECT_TRUE(brute_force_equal(instantiate_fresh(law.gamma1),
                                  instantiate_fresh(law.gamma2)))
        << law.name;
  }
}

TEST(LawTable, IdsAreIndices) {
  for (int i = 0; i < kLawRuleCount; ++i) EXPECT_EQ(law_table()[i].id, i);
  EXPECT_EQ(law_by_name("Double Negation")->id, 16);
  EXPECT_EQ(law_by_name("Nope"), nullptr);
}

TEST(LawTable, Categories) {
  EXPECT_EQ(law_by_name("Identity-∧")->category(), Category::kEasy);
  EXPECT_EQ(law_by_name("Distributive-∨")->category(), Category::kMedian);
  EXPECT_EQ(law_by_name("Absorption-∧")->category(), Category::kHard);
  int counts[kCategoryCount] = {};
  for (const LawRule& law : law_table()) ++counts[static_cast<int>(law.category())];
  EXPECT_EQ(counts[0], 5);
  EXPECT_EQ(counts[1], 8);
  EXPECT_EQ(counts[2], 6);
}

TEST(LawTable, SlotsInFirstOccurrenceOrder) {
  EXPECT_EQ(law_by_name("Commutative-∧")->slots(),
            (std::vector<Slot>{Slot::kJ, Slot::kK}));
  EXPECT_EQ(law_by_name("Negation-∨")->slots(), (std::vector<Slot>{Slot::kJ}));
  EXPECT_EQ(law_by_name("Distributive-∧")->slots().size(), 3u);
}

TEST(Structural, FiveRulesInOrder) {
  ASSERT_EQ(kStructuralRules.size(), 5u);
  EXPECT_EQ(structural_name(kStructuralRules[0]), "Literal");
  EXPECT_EQ(structural_name(kStructuralRules[4]), "Not");
  EXPECT_EQ(structural_from_name("Implies"), StructuralKind::kImplies);
  EXPECT_EQ(structural_from_name("Iff"), std::nullopt);
}

TEST(SelectRule, Examples) {
  EXPECT_EQ(select_rule(0, 5), 0);
  EXPECT_EQ(select_rule(15, 5), 4);
  EXPECT_EQ(select_rule(7, 19), 8);
}

TEST(SelectRule, CoversEveryBucket) {
  for (int n : {5, 19}) {
    int prev = 0;
    for (int d = 0; d < 16; ++d) {
      const int r = select_rule(d, n);
      EXPECT_GE(r, prev);
      EXPECT_LT(r, n);
      // r is the smallest order o with 16/n * (o + 1) > d.
      EXPECT_GT(16.0 / n * (r + 1), d);
      if (r > 0) {
        EXPECT_LE(16.0 / n * r, d);
      }
      prev = r;
    }
  }
}

TEST(RuleOrdering, Permutations) {
  RuleOrdering id(5);
  EXPECT_TRUE(id.is_identity());
  auto o = RuleOrdering::from_permutation({4, 0, 1, 2, 3});
  ASSERT_TRUE(o.has_value());
  EXPECT_EQ(o->rule_at(0), 4);
  EXPECT_EQ(o->order_of(4), 0);
  EXPECT_FALSE(o->is_identity());
  EXPECT_FALSE(RuleOrdering::from_permutation({0, 0, 1}).has_value());
  EXPECT_FALSE(RuleOrdering::from_permutation({1, 2, 3}).has_value());
}

}  // namespace
}  // namespace qgen
