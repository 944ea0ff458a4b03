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

#include <gtest/gtest.h>

#include "dttg/cwf.h"
#include "dttg/fixtures.h"

namespace dttg {
namespace {

Move M(std::vector<Tag> path, std::string base) { return {std::move(path), std::move(base)}; }

class CwfTest : public ::testing::Test {
 protected:
  Cwf cwf{2};
  Game b = Boolean();
  DependentGame B0 = DependentGame::Constant(b);
  ContextGame one{{B0}};
  ContextGame two{{B0, DependentGame::Constant(b, {b})}};

  TyEntry BoolOver(const ContextGame& g) { return {g, {DependentGame::Constant(b, g.totals())}}; }
  Morphism Single(const ContextGame& src, const ContextGame& tgt, Strategy s) {
    return {src, tgt, {std::move(s)}};
  }
  std::vector<Strategy> Hom(const ContextGame& g) {
    return EnumerateWinning(cwf.HomGame(g, DependentGame::Constant(b, g.totals())));
  }
};

TEST_F(CwfTest, IdentityIsWellTyped) {
  EXPECT_TRUE(cwf.WellTyped(cwf.Identity(one)));
  EXPECT_TRUE(cwf.WellTyped(cwf.Identity(two)));
}

TEST_F(CwfTest, UnitLaws) {
  Morphism id = cwf.Identity(one);
  for (const Strategy& s : Hom(one)) {
    Morphism f = Single(one, one, s);
    EXPECT_TRUE(Cwf::Equal(cwf.Compose(f, id), f));
    EXPECT_TRUE(Cwf::Equal(cwf.Compose(id, f), f));
  }
}

TEST_F(CwfTest, Associativity) {
  auto hom = Hom(one);
  Game two_hom = cwf.HomGame(two, DependentGame::Constant(b, two.totals()));
  std::mt19937_64 rng(7);
  int checked = 0;
  for (std::size_t i = 0; i < hom.size(); i += 7) {
    for (int j = 0; j < 3; ++j) {
      Morphism f{one, two, {hom[i], hom[(i + 3) % hom.size()]}};
      Morphism g{two, one, {*SampleWinning(two_hom, rng)}};
      Morphism h = Single(one, one, hom[(i * 5 + 1) % hom.size()]);
      std::optional<Morphism> lhs, rhs;
      try {
        lhs = cwf.Compose(cwf.Compose(f, g), h);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kBoundExceeded);
      }
      try {
        rhs = cwf.Compose(f, cwf.Compose(g, h));
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kBoundExceeded);
      }
      if (lhs && rhs) {
        ++checked;
        EXPECT_TRUE(Cwf::Equal(*lhs, *rhs));
      }
    }
  }
  EXPECT_GT(checked, 5);
}

TEST_F(CwfTest, Comprehension) {
  TyEntry a = BoolOver(one);
  Morphism p = cwf.P(a);
  Term v = cwf.V(a);
  EXPECT_TRUE(cwf.WellTyped(p));
  EXPECT_TRUE(cwf.WellTyped(v));
  // Cons-Id.
  EXPECT_TRUE(Cwf::Equal(cwf.Extend(p, a, v), cwf.Identity(a.Extended())));
  auto hom = Hom(one);
  for (std::size_t i = 0; i < hom.size(); i += 5) {
    Morphism f = cwf.Identity(one);
    Term t{one, cwf.TySubst(a, f), {hom[i]}};
    Morphism ft = cwf.Extend(f, a, t);
    // Cons-L and Cons-R.
    EXPECT_TRUE(Cwf::Equal(cwf.Compose(ft, p), f));
    EXPECT_TRUE(Cwf::Equal(cwf.TmSubst(v, ft), t));
  }
}

TEST_F(CwfTest, PiTermsIncludeBasicFunctions) {
  TyEntry a = BoolOver(ContextGame());
  TyEntry pi = cwf.Pi(a, BoolOver(a.Extended()));
  auto all = EnumerateWinning(cwf.HomGame(ContextGame(), pi.entries[0]));
  EXPECT_EQ(all.size(), 38u);
}

TEST_F(CwfTest, BetaForIdentityFunction) {
  ContextGame empty;
  TyEntry a = BoolOver(empty);
  Term body = cwf.V(a);
  Term lam = cwf.Lambda(a, body);
  EXPECT_TRUE(cwf.WellTyped(lam));
  Term tt{empty, a, {ConstantStrategy(cwf.HomGame(empty, a.entries[0]), "tt")}};
  ASSERT_TRUE(cwf.WellTyped(tt));
  Term r = cwf.App(lam, tt, body.type);
  EXPECT_TRUE(Cwf::Equal(r, tt));
}

TEST_F(CwfTest, IdFibres) {
  ContextGame empty;
  TyEntry a = BoolOver(empty);
  Game hom = cwf.HomGame(empty, a.entries[0]);
  Term tt{empty, a, {ConstantStrategy(hom, "tt")}};
  Term ff{empty, a, {ConstantStrategy(hom, "ff")}};
  EXPECT_EQ(EnumerateWinning(cwf.Id(a, tt, tt).entries[0].Bottom()).size(), 1u);
  EXPECT_EQ(EnumerateWinning(cwf.Id(a, tt, ff).entries[0].Bottom()).size(), 0u);
  Term r = cwf.Refl(tt);
  EXPECT_TRUE(cwf.WellTyped(r));
}

TEST_F(CwfTest, UipIsWinning) {
  TyEntry a = BoolOver(ContextGame());
  Term u = cwf.Uip(a);
  EXPECT_TRUE(cwf.WellTyped(u));
}

TEST_F(CwfTest, FiniteFamilyCase) {
  FiniteFamily fam = MakeFamily(b, {{"tt", Point(b, "tt"), {"c0", "c1"}}, {"ff", Point(b, "ff"), {"d0"}}},
                                "F");
  ContextGame empty;
  Term c0 = cwf.Constructor(empty, fam, "c0");
  EXPECT_TRUE(cwf.WellTyped(c0));
  ContextGame gx({B0});
  ContextGame gxy = gx.Extend(cwf.FamilyOver(gx, fam).entries[0]);
  TyEntry motive = BoolOver(gxy);
  std::map<std::string, Term> branches;
  Game hom = cwf.HomGame(empty, DependentGame::Constant(b));
  branches["c0"] = Term{empty, BoolOver(empty), {ConstantStrategy(hom, "tt")}};
  branches["c1"] = Term{empty, BoolOver(empty), {ConstantStrategy(hom, "ff")}};
  branches["d0"] = Term{empty, BoolOver(empty), {ConstantStrategy(hom, "tt")}};
  Term cs = cwf.Case(empty, fam, motive, branches);
  EXPECT_TRUE(cwf.WellTyped(cs));
  EXPECT_THROW(MakeFamily(b, {{"tt", Point(b, "tt"), {"c0"}}, {"tt2", Point(b, "tt"), {"c1"}}}), Error);
  EXPECT_THROW(MakeFamily(b, {{"tt", Point(b, "tt"), {"c0"}}, {"ff", Point(b, "ff"), {"c0"}}}), Error);
}

}  // namespace
}  // namespace dttg
