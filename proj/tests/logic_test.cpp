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


#include "qgen/logic.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "qgen/error.hpp"
#include "test_support.hpp"

namespace qgen {
namespace {

using ::qgen::testing::reference_truth_table;
using ::qgen::testing::random_proposition;

Proposition P() { return var("p"); }
Proposition Q() { return var("q"); }
Proposition R() { return var("r"); }

TEST(TruthTable, EveryReferenceCell) {
  const OpKind binary_ops[] = {OpKind::kAnd, OpKind::kOr, OpKind::kImplies,
                               OpKind::kIff};
  for (const auto& row : reference_truth_table()) {
    Assignment a{{"P", row.p}, {"Q", row.q}};
    EXPECT_EQ(eval(neg(var("P")), a), row.cells[0] == 'T');
    for (int c = 0; c < 4; ++c) {
      Proposition e = Proposition::binary(binary_ops[c], var("P"), var("Q"));
      EXPECT_EQ(eval(e, a), row.cells[c + 1] == 'T')
          << "row " << row.p << row.q << " column " << c + 1;
    }
  }
}

TEST(Eval, Examples) {
  EXPECT_FALSE(eval(conj(var("P"), var("Q")), {{"P", true}, {"Q", false}}));
  EXPECT_TRUE(eval(implies(var("P"), var("Q")), {{"P", false}, {"Q", false}}));
  EXPECT_TRUE(eval(P(), {{"p", true}}));
  EXPECT_TRUE(eval(top(), {}));
  EXPECT_FALSE(eval(bottom(), {}));
}

TEST(Eval, UnboundVariableNamesIt) {
  try {
    eval(conj(P(), Q()), {{"p", true}});
    FAIL() << "expected EvalError";
  } catch (const EvalError& e) {
    EXPECT_EQ(e.variable(), "q");
  }
}

TEST(Variables, FirstOccurrenceOrder) {
  using V = std::vector<std::string>;
  EXPECT_EQ(variables(disj(P(), conj(P(), Q()))), (V{"p", "q"}));
  EXPECT_EQ(variables(top()), V{});
  EXPECT_EQ(variables(neg(implies(Q(), P()))), (V{"q", "p"}));
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(equivalent(disj(P(), conj(P(), Q())), P()));
  EXPECT_FALSE(equivalent(P(), neg(P())));
  EXPECT_TRUE(equivalent(conj(disj(P(), top()), P()), conj(top(), P())));
  // Differing variable sets are compared over the union.
  EXPECT_TRUE(equivalent(disj(Q(), neg(Q())), disj(P(), neg(P()))));
  EXPECT_FALSE(equivalent(P(), Q()));
}

TEST(Equivalent, VariableLimit) {
  Proposition big = var("x0");
  for (int i = 1; i < 22; ++i) big = conj(big, var("x" + std::to_string(i)));
  EXPECT_THROW(equivalent(big, big), ResourceError);
  EXPECT_TRUE(equivalent(big, big, 22));
}

TEST(Equivalent, ReflexiveAndSymmetric) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Proposition a = random_proposition(rng, 4);
    Proposition b = random_proposition(rng, 4);
    EXPECT_TRUE(equivalent(a, a));
    EXPECT_EQ(equivalent(a, b), equivalent(b, a));
  }
}

TEST(Parse, Examples) {
  EXPECT_EQ(parse("p & q | r", Syntax::kAscii), disj(conj(P(), Q()), R()));
  EXPECT_EQ(parse("!!p", Syntax::kAscii), neg(neg(P())));
  EXPECT_EQ(parse("(p ∨ T) ∧ p"), conj(disj(P(), top()), P()));
  EXPECT_EQ(parse("p ⊂ q"), implies(P(), Q()));
  EXPECT_EQ(parse("\\neg (p \\wedge q)", Syntax::kLatex), neg(conj(P(), Q())));
  EXPECT_EQ(parse("\\lnot p \\land q", Syntax::kLatex), conj(neg(P()), Q()));
  EXPECT_EQ(parse("p <-> q -> r", Syntax::kAscii),
            iff(P(), implies(Q(), R())));
  EXPECT_EQ(parse("x_1 & y2", Syntax::kAscii), conj(var("x_1"), var("y2")));
}

TEST(Parse, ImplicationIsRightAssociative) {
  const Proposition chained = parse("p -> q -> r", Syntax::kAscii);
  const Proposition right = parse("p -> (q -> r)", Syntax::kAscii);
  const Proposition left = parse("(p -> q) -> r", Syntax::kAscii);
  EXPECT_EQ(chained, implies(P(), implies(Q(), R())));
  EXPECT_TRUE(equivalent(chained, right));
  EXPECT_FALSE(equivalent(chained, left));
}

TEST(Parse, AndOrAreLeftAssociative) {
  EXPECT_EQ(parse("p & q & r", Syntax::kAscii), conj(conj(P(), Q()), R()));
  EXPECT_EQ(parse("p ∨ q ∨ r"), disj(disj(P(), Q()), R()));
}

TEST(Parse, ErrorsCarryPosition) {
  struct Case {
    const char* text;
    std::size_t position;
  };
  const Case cases[] = {{"", 0},       {"p &", 3},   {"(p", 0},
                        {"p)", 1},     {"p q", 2},   {"p & & q", 4},
                        {"P", 0},      {"p $ q", 2}, {"!(p | q", 1}};
  for (const Case& c : cases) {
    try {
      parse(c.text, Syntax::kAscii);
      ADD_FAILURE() << "accepted '" << c.text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), c.position) << c.text << ": " << e.what();
    }
  }
}

TEST(Parse, SyntaxesAreStrict) {
  EXPECT_THROW(parse("p & q"), ParseError);
  EXPECT_THROW(parse("p ∧ q", Syntax::kAscii), ParseError);
  EXPECT_THROW(parse("\\wedgep", Syntax::kLatex), ParseError);
}

TEST(Render, Examples) {
  EXPECT_EQ(render(conj(disj(P(), top()), P())), "(p ∨ T) ∧ p");
  EXPECT_EQ(render(neg(conj(P(), Q()))), "¬(p ∧ q)");
  EXPECT_EQ(render(conj(neg(P()), Q())), "¬p ∧ q");
  EXPECT_EQ(render(conj(disj(P(), top()), P()), Syntax::kAscii),
            "(p | T) & p");
  EXPECT_EQ(render(implies(neg(P()), iff(Q(), R())), Syntax::kAscii),
            "!p -> (q <-> r)");
  EXPECT_EQ(render(conj(disj(P(), top()), P()), Syntax::kLatex),
            "(p \\vee T) \\wedge p");
}

TEST(Render, EqualPowerChains) {
  EXPECT_EQ(render(conj(conj(P(), Q()), R())), "p ∧ q ∧ r");
  EXPECT_EQ(render(conj(P(), conj(Q(), R()))), "p ∧ (q ∧ r)");
  EXPECT_EQ(render(implies(P(), implies(Q(), R()))), "p ⊃ q ⊃ r");
  EXPECT_EQ(render(implies(implies(P(), Q()), R())), "(p ⊃ q) ⊃ r");
  EXPECT_EQ(render(neg(neg(P()))), "¬¬p");
}

TEST(Render, LeavesAreNeverWrapped) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::string text = render(random_proposition(rng, 5));
    for (const char* leaf : {"(p)", "(q)", "(r)", "(s)", "(T)", "(F)"}) {
      EXPECT_EQ(text.find(leaf), std::string::npos) << text;
    }
  }
}

TEST(RoundTrip, RandomTreesAllSyntaxes) {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 1000; ++i) {
    const Proposition x = random_proposition(rng, 8);
    for (Syntax s : {Syntax::kUnicode, Syntax::kAscii, Syntax::kLatex}) {
      const std::string text = render(x, s);
      EXPECT_EQ(parse(text, s), x) << text;
    }
  }
}

}  // namespace
}  // namespace qgen
