/* Copyright 2026 The Lambek Brackets Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "lambek/text_io.h"

#include "gtest/gtest.h"
#include "lambek/enumerator.h"
#include "lambek/errors.h"

namespace lambek {
namespace {

const Formula p1 = Formula::Var(1);
const Formula p2 = Formula::Var(2);
const Formula one = Formula::Unit();

TEST(ParseFormulaTest, Basic) {
  EXPECT_EQ(parse_formula("p1 \\ p2"), Formula::Under(p1, p2));
  EXPECT_EQ(parse_formula("p2 / p1"), Formula::Over(p2, p1));
  EXPECT_EQ(parse_formula("<> p1 * 1"),
            Formula::Prod(Formula::Diamond(p1), one));
  EXPECT_EQ(parse_formula("[]^-1 p1"), Formula::BracketInv(p1));
  EXPECT_EQ(parse_formula("[]-1 p1"), Formula::BracketInv(p1));
}

TEST(ParseFormulaTest, DivisionsShareOnePrecedenceLevel) {
  EXPECT_EQ(parse_formula("p1\\p2/p1"),
            Formula::Over(Formula::Under(p1, p2), p1));
  EXPECT_EQ(parse_formula("p1/p2\\p1"),
            Formula::Under(Formula::Over(p1, p2), p1));
  EXPECT_EQ(parse_formula("p1 * p2 \\ p1"),
            Formula::Under(Formula::Prod(p1, p2), p1));
  EXPECT_EQ(parse_formula("p1 * p2 * p1"),
            Formula::Prod(Formula::Prod(p1, p2), p1));
}

TEST(ParseFormulaTest, BareNamesAvoidExplicitIndices) {
  const Formula qq = Formula::Under(p2, p2);
  EXPECT_EQ(parse_formula("(q\\q) \\ []^-1 p1 / (q\\q)"),
            Formula::Over(Formula::Under(qq, Formula::BracketInv(p1)), qq));
  EXPECT_EQ(parse_formula("q"), p1);
}

TEST(ParseFormulaTest, SymbolTableIsSharedAcrossCalls) {
  SymbolTable symbols;
  symbols.reserve_from("np \\ s");
  symbols.reserve_from("p1");
  const Formula a = parse_formula("np", symbols);
  const Formula b = parse_formula("np \\ s", symbols);
  EXPECT_EQ(a, Formula::Var(2));
  EXPECT_EQ(b, Formula::Under(Formula::Var(2), Formula::Var(3)));
  EXPECT_EQ(format_formula(b, &symbols), "np\\s");
  EXPECT_EQ(symbols.name(1), "p1");
}

TEST(ParseFormulaTest, Errors) {
  for (const char* bad : {"", "p1 \\", "(p1", "p1)", "p1 p2", "<>", "2",
                          "p0", "p1 # p2", "[p1]", "[]^-2 p1", "->"}) {
    EXPECT_THROW(parse_formula(bad), SyntaxError) << bad;
  }
}

TEST(ParseFormulaTest, ErrorPositionIsAnOffset) {
  try {
    parse_formula("p1 * # p2");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  try {
    parse_formula("p1 *");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_LE(e.position(), 4u);
  }
}

TEST(ParseSequentTest, Examples) {
  EXPECT_EQ(parse_sequent("-> 1"), (Sequent{{}, one}));
  EXPECT_EQ(parse_sequent("[p1] -> <>p1"),
            (Sequent{Bracket({p1}), Formula::Diamond(p1)}));
  EXPECT_EQ(parse_sequent("1, p1, 1 -> p1"), (Sequent{{one, p1, one}, p1}));
  EXPECT_EQ(parse_sequent("[] -> p1"), (Sequent{Bracket({}), p1}));
  EXPECT_EQ(parse_sequent("[[]^-1 p1] -> p1"),
            (Sequent{Bracket({Formula::BracketInv(p1)}), p1}));
}

TEST(ParseSequentTest, Errors) {
  for (const char* bad : {"p1", "[p1 -> p1", "p1] -> p1", "p1, -> p1",
                          ", p1 -> p1", "p1 -> p1, p1", "p1 -> ", "p1 -> [p1]"}) {
    EXPECT_THROW(parse_sequent(bad), SyntaxError) << bad;
  }
}

TEST(FormatTest, Examples) {
  EXPECT_EQ(format_sequent(Sequent{{}, one}), "-> 1");
  EXPECT_EQ(format_sequent(Sequent{Bracket({p1}), Formula::Diamond(p1)}),
            "[p1] -> <>p1");
  EXPECT_EQ(format_sequent(Sequent{{Formula::Prod(p1, one)}, p1}),
            "p1 * 1 -> p1");
  EXPECT_EQ(format_formula(Formula::BracketInv(Formula::Under(p1, p1))),
            "[]^-1 (p1\\p1)");
  EXPECT_EQ(format_formula(Formula::Under(p1, Formula::Under(p1, p1))),
            "p1 \\ (p1\\p1)");
}

TEST(FormatTest, RoundTripsEveryEnumeratedSequent) {
  const EnumSpec spec{5, 2, true, true, 2};
  std::size_t n = 0;
  for (const Sequent& s : enumerate_sequents(spec)) {
    const std::string text = format_sequent(s);
    ASSERT_EQ(parse_sequent(text), s) << text;
    ++n;
  }
  EXPECT_GT(n, 0u);
}

TEST(FormatTest, RoundTripsFormulasOfSizeSeven) {
  for (Formula f : formulas_of_size({7, 1, true, false, 0}, 7)) {
    ASSERT_EQ(parse_formula(format_formula(f)), f) << format_formula(f);
  }
}

}  // namespace
}  // namespace lambek
