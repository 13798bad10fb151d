#include <gtest/gtest.h>

#include "emltab/parser.hpp"
#include "support.hpp"

using namespace emltab;
using testing_support::P;

TEST(Parser, GrammarProductions) {
  FormulaFactory f;
  Coalition ac = f.coalition({"a", "c"}), ab = f.coalition({"a", "b"});
  EXPECT_EQ(P(f, "D{a,c} C{a,b} p"), f.dist(ac, f.common(ab, f.atom("p"))));
  EXPECT_EQ(P(f, "K{a} p"), f.dist(f.coalition({"a"}), f.atom("p")));
  EXPECT_EQ(P(f, "~(p & q)"), f.neg(f.conj(f.atom("p"), f.atom("q"))));
}

TEST(Parser, Precedence) {
  FormulaFactory f;
  Formula p = f.atom("p"), q = f.atom("q"), r = f.atom("r");
  EXPECT_EQ(P(f, "p | q & r"), f.disj(p, f.conj(q, r)));
  EXPECT_EQ(P(f, "p -> q -> r"), f.implies(p, f.implies(q, r)));
  EXPECT_EQ(P(f, "p <-> q <-> r"), f.iff(f.iff(p, q), r));
  EXPECT_EQ(P(f, "p & q & r"), f.conj(f.conj(p, q), r));
  EXPECT_EQ(P(f, "~p & q"), f.conj(f.neg(p), q));
  EXPECT_EQ(P(f, "D{a}p & q"), f.conj(f.dist(f.coalition({"a"}), p), q));
  EXPECT_EQ(P(f, "p -> q | r"), f.implies(p, f.disj(q, r)));
}

TEST(Parser, IdentifiersMayStartWithOperatorLetters) {
  FormulaFactory f;
  EXPECT_EQ(P(f, "Dx & C"), f.conj(f.atom("Dx"), f.atom("C")));
  EXPECT_EQ(P(f, "C{agent_1}K1"), f.common(f.coalition({"agent_1"}), f.atom("K1")));
}

TEST(Parser, Errors) {
  FormulaFactory f;
  auto pos = [&](const char* text) -> std::size_t {
    try {
      parse(text, f);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(pos("p &"), 3u);
  EXPECT_EQ(pos("D{}p"), 2u);
  EXPECT_EQ(pos("K{a,b}p"), 3u);
  EXPECT_EQ(pos("(p"), 2u);
  EXPECT_EQ(pos("p q"), 2u);
  EXPECT_EQ(pos("p $ q"), 2u);
  EXPECT_EQ(pos("1p"), 0u);
  EXPECT_EQ(pos(""), 0u);
}

TEST(Printer, Examples) {
  FormulaFactory f;
  Formula p = f.atom("p"), q = f.atom("q");
  EXPECT_EQ(print(f.neg(p), f), "~p");
  EXPECT_EQ(print(f.common(f.coalition({"a", "b"}), f.conj(p, q)), f), "C{a,b}(p & q)");
  EXPECT_EQ(print(f.dist(f.coalition({"a"}), f.common(f.coalition({"a", "b"}), p)), f), "D{a}C{a,b}p");
  EXPECT_EQ(print(P(f, "p & (q & p)"), f), "p & (q & p)");
  EXPECT_EQ(print(P(f, "(p & q) & p"), f), "p & q & p");
}

TEST(Printer, RoundTripFixed) {
  for (const char* text : {"~~p", "D{a,c}C{a,b}p & C{a,b}(p & q)", "~(C{a}~D{b}p & ~~q)", "p <-> D{b}q"}) {
    FormulaFactory f;
    Formula g = P(f, text);
    EXPECT_EQ(P(f, print(g, f)), g) << text;
  }
}
