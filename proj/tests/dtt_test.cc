// Copyright 2026 The dttg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "dttg/dtt.h"
#include "dttg/error.h"

namespace dttg::dtt {
namespace {

std::string ReadFixture(const std::string& name) {
  std::ifstream in(std::string(DTTG_FIXTURES_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExprPtr P(const std::string& s, const std::vector<std::string>& scope = {}) { return ParseExpr(s, scope); }

Signature Calendar() {
  Signature sig;
  sig.Load(ReadFixture("calendar.dtt"));
  return sig;
}

TEST(DttParse, LambdaNode) {
  ExprPtr e = P("λ(x:Bool). x");
  ASSERT_EQ(e->node, Node::kLam);
  EXPECT_EQ(e->kids[0]->node, Node::kGlobal);
  EXPECT_EQ(e->kids[1]->node, Node::kVar);
  EXPECT_EQ(e->kids[1]->index, 0);
  EXPECT_TRUE(AlphaEqual(e, P("\\(y : Bool) => y")));
  EXPECT_TRUE(AlphaEqual(P("A → B → C"), P("A -> (B -> C)")));
}

TEST(DttParse, UnbalancedParensDiagnostic) {
  try {
    ParseExpr("(λx. (x tt)");
    FAIL() << "parsed";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("1:"), std::string::npos);
  }
  EXPECT_THROW(ParseExpr("fst (a, b))"), Error);
}

TEST(DttParse, PrintParseRoundTrip) {
  const char* cases[] = {
      "λ(x : Bool). λy. case x of { tt => y; ff => tt }",
      "Π(x : Bool). Σ(y : Bool). Id Bool x y",
      "(Bool → Bool) → Bool × Unit",
      "λx. λx. x",
      "J (a b p. Id Bool b a) (a. refl a) q",
      "case z return (y. Id Bool y y) of { tt => refl tt; ff => refl ff }",
      "exfalso (Bool → Bool) e",
      "((λx. x) : Bool → Bool) (fst ((), tt))",
      "if b then ff else tt",
  };
  for (const char* c : cases) {
    ExprPtr e = P(c);
    ExprPtr again = P(Print(e));
    EXPECT_TRUE(AlphaEqual(e, again)) << c << " printed as " << Print(e);
  }
}

TEST(DttParse, CalendarModuleRoundTrip) {
  auto decls = ParseModule(ReadFixture("calendar.dtt"));
  ASSERT_GE(decls.size(), 3u);
  const auto& fam = std::get<FamilyDecl>(decls[1]);
  EXPECT_EQ(fam.points.size(), 6u);
  EXPECT_EQ(fam.points[1].constructors.size(), 366u);
  std::string printed = PrintModule(decls);
  EXPECT_NE(printed.find("d1984_0..d1984_365"), std::string::npos);
  auto again = ParseModule(printed);
  ASSERT_EQ(again.size(), decls.size());
  for (std::size_t i = 0; i < decls.size(); ++i) EXPECT_TRUE(DeclsEqual(decls[i], again[i])) << i;
}

TEST(DttCheck, ReflAccepted) {
  Signature sig;
  EXPECT_NO_THROW(Check(sig, {}, P("refl tt"), P("Id Bool tt tt")));
  EXPECT_THROW(Check(sig, {}, P("refl tt"), P("Id Bool tt ff")), Error);
}

TEST(DttCheck, VariableIsNotAProof) {
  Signature sig;
  Telescope ctx{{"x", P("Bool")}};
  try {
    Check(sig, ctx, MakeVar(0, "x"), P("Id Bool tt tt"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kType);
  }
}

TEST(DttCheck, Diagnostics) {
  Signature sig;
  EXPECT_THROW(Check(sig, {}, P("nope"), P("Bool")), Error);
  EXPECT_THROW(Check(sig, {}, P("case () of { tt => tt }"), P("Bool")), Error);
  EXPECT_THROW(Check(sig, {}, P("λx. case x of { tt => tt }"), P("Bool → Bool")), Error);
  EXPECT_THROW(Check(sig, {}, P("tt tt"), P("Bool")), Error);
}

TEST(DttCheck, CalendarFixtureChecks) {
  Signature sig = Calendar();
  EXPECT_EQ(sig.PointNames("Days").size(), 6u);
  EXPECT_EQ(sig.Ctor("d1984_365")->point, 1);
  EXPECT_EQ(sig.DefOrder().size(), 5u);
}

TEST(DttCheck, CaseAtPoint1984With366Branches) {
  Signature sig = Calendar();
  std::string src = "λd. case d of {";
  for (int i = 0; i < 366; ++i) src += " d1984_" + std::to_string(i) + " => " + (i == 59 ? "tt" : "ff") + ";";
  src.back() = ' ';
  src += "}";
  ExprPtr f = Check(sig, {}, P(src), P("Days 1984 → Bool"));
  EXPECT_EQ(f->kids[1]->branches.size(), 366u);
  ExprPtr ann = MakeNode(Node::kAnn, {P(src), P("Days 1984 → Bool")});
  EXPECT_TRUE(DefEq(sig, {}, MakeApp(ann, P("d1984_59")), P("tt"), P("Bool")));
  EXPECT_TRUE(DefEq(sig, {}, MakeApp(ann, P("d1984_60")), P("ff"), P("Bool")));
  // A branch from the wrong year is rejected.
  std::string bad = src;
  bad.replace(bad.find("d1984_0 "), 7, "d1983_0");
  EXPECT_THROW(Check(sig, {}, P(bad), P("Days 1984 → Bool")), Error);
}

TEST(DttCheck, DuplicateDeclarations) {
  Signature sig;
  try {
    sig.Load("data T { a | tt }");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateConstructor);
  }
  try {
    sig.Load("family F (x : Bool) { tt => a; ff => b; tt => c }");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicatePoint);
  }
}

TEST(DttEval, BetaAndProjections) {
  Signature sig;
  EXPECT_TRUE(DefEq(sig, {}, P("(λx. x : Bool → Bool) tt"), P("tt"), P("Bool")));
  Telescope ctx{{"a", P("Bool")}, {"b", P("Unit")}};
  ExprPtr a = MakeVar(1, "a"), b = MakeVar(0, "b");
  ExprPtr pair = MakeNode(Node::kPair, {a, b});
  EXPECT_TRUE(DefEq(sig, ctx, MakeNode(Node::kFst, {MakeNode(Node::kAnn, {pair, P("Bool × Unit")})}), a,
                    P("Bool")));
}

TEST(DttEval, NoEqualityReflection) {
  Signature sig;
  Telescope ctx{{"x", P("Bool")}, {"y", P("Bool")}, {"z", MakeNode(Node::kId, {P("Bool"), MakeVar(1), MakeVar(0)})}};
  EXPECT_FALSE(DefEq(sig, ctx, MakeVar(2), MakeVar(1), P("Bool")));
  EXPECT_TRUE(DefEq(sig, ctx, MakeVar(2), MakeVar(2), P("Bool")));
}

TEST(DttEval, EtaAndIdBeta) {
  Signature sig;
  Telescope ctx{{"f", P("Bool → Bool")}, {"p", P("Bool × Bool")}, {"u", P("Unit")}};
  std::vector<std::string> names{"f", "p", "u"};
  EXPECT_TRUE(DefEq(sig, ctx, P("λx. f x", names), MakeVar(2), P("Bool → Bool")));
  EXPECT_TRUE(DefEq(sig, ctx, MakeVar(1), P("(fst p, snd p)", names), P("Bool × Bool")));
  EXPECT_TRUE(DefEq(sig, ctx, MakeVar(0), P("()"), P("Unit")));
  EXPECT_TRUE(DefEq(sig, {}, P("J (a b q. Bool) (a. a) (refl ff : Id Bool ff ff)"), P("ff"), P("Bool")));
  // Weak case-η: the identity dispatch equals the scrutinee; swapping does not.
  Telescope b{{"y", P("Bool")}};
  EXPECT_TRUE(DefEq(sig, b, P("case y of { tt => tt; ff => ff }", {"y"}), MakeVar(0), P("Bool")));
  EXPECT_FALSE(DefEq(sig, b, P("case y of { tt => ff; ff => tt }", {"y"}), MakeVar(0), P("Bool")));
}

TEST(DttEval, CaseBetaAcrossCalendar) {
  Signature sig = Calendar();
  EXPECT_TRUE(DefEq(sig, {}, P("newYear 1984"), P("d1984_0"), P("Days 1984")));
  EXPECT_TRUE(DefEq(sig, {}, P("leap 1988"), P("tt"), P("Bool")));
  EXPECT_TRUE(DefEq(sig, {}, P("fst release"), P("1987"), P("Year")));
  EXPECT_TRUE(DefEq(sig, {}, P("snd release"), P("d1987_206"), P("Days 1987")));
  EXPECT_FALSE(DefEq(sig, {}, P("snd release"), P("d1987_207"), P("Days 1987")));
}

// Random closed terms of type Bool built from λ, application, pairs, projections and case.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  std::string Bool(int depth) {
    int pick = static_cast<int>(rng_() % (depth <= 0 ? 2 : 7));
    switch (pick) {
      case 0: return "tt";
      case 1: return "ff";
      case 2: return "(λ(x : Bool). " + Bool(depth - 1) + ") (" + Bool(depth - 1) + ")";
      case 3: return "fst (" + Bool(depth - 1) + ", " + Bool(depth - 1) + ")";
      case 4: return "snd (" + Bool(depth - 1) + ", " + Bool(depth - 1) + ")";
      case 5: return "(if " + Bool(depth - 1) + " then " + Bool(depth - 1) + " else " + Bool(depth - 1) + ")";
      default: return "(λ(f : Bool → Bool). f (" + Bool(depth - 1) + ")) (λ(z : Bool). " + Bool(depth - 1) + ")";
    }
  }

 private:
  std::mt19937_64 rng_;
};

TEST(DttEval, DefEqIsEquivalenceAndCongruence) {
  Signature sig;
  TermGen gen(11);
  std::vector<ExprPtr> terms;
  for (int i = 0; i < 40; ++i) terms.push_back(P(gen.Bool(3)));
  ExprPtr ty = P("Bool");
  ExprPtr neg = P("λ(b : Bool). if b then ff else tt");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    EXPECT_TRUE(DefEq(sig, {}, terms[i], terms[i], ty));
    ExprPtr nf = Normalize(sig, {}, terms[i], ty);
    EXPECT_NO_THROW(Check(sig, {}, nf, ty)) << Print(nf);
    for (std::size_t j = 0; j < terms.size(); ++j) {
      bool ij = DefEq(sig, {}, terms[i], terms[j], ty);
      EXPECT_EQ(ij, DefEq(sig, {}, terms[j], terms[i], ty));
      if (ij) EXPECT_TRUE(DefEq(sig, {}, MakeApp(neg, terms[i]), MakeApp(neg, terms[j]), ty));
      for (std::size_t k = 0; k < 5 && ij; ++k) {
        if (DefEq(sig, {}, terms[j], terms[k], ty)) EXPECT_TRUE(DefEq(sig, {}, terms[i], terms[k], ty));
      }
    }
  }
}

}  // namespace
}  // namespace dttg::dtt
