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

#include "dttg/arena.h"
#include "dttg/error.h"

namespace dttg {
namespace {

Move M(std::vector<Tag> path, std::string base) { return {std::move(path), std::move(base)}; }

TEST(Arena, FlatPlays) {
  Game g = Flat({"0", "1"});
  EXPECT_TRUE(IsPlay(g, {}));
  EXPECT_TRUE(IsPlay(g, {M({}, "*")}));
  EXPECT_TRUE(IsPlay(g, {M({}, "*"), M({}, "1")}));
  EXPECT_FALSE(IsPlay(g, {M({}, "1")}));
  EXPECT_FALSE(IsPlay(g, {M({}, "*"), M({}, "2")}));
}

TEST(Arena, LollipopFlipsLeftPolarity) {
  Game g = Lollipop(Boolean(), Boolean());
  EXPECT_EQ(Label(g, M({kLeft}, "*"))->polarity, Polarity::kP);
  EXPECT_EQ(Label(g, M({kRight}, "*"))->polarity, Polarity::kO);
  EXPECT_TRUE(IsPlay(g, {M({kRight}, "*"), M({kLeft}, "*"), M({kLeft}, "tt"), M({kRight}, "ff")}));
  EXPECT_FALSE(IsPlay(g, {M({kLeft}, "*")}));
}

TEST(Arena, AnswersFollowStackDiscipline) {
  Game g = Lollipop(Boolean(), Boolean());
  EXPECT_FALSE(IsPlay(g, {M({kRight}, "*"), M({kLeft}, "*"), M({kRight}, "tt")}));
}

TEST(Arena, WithPlaysStayOnOneSide) {
  Game g = With(Boolean(), Flat({"a"}));
  EXPECT_TRUE(IsPlay(g, {M({kRight}, "*"), M({kRight}, "a")}));
  EXPECT_FALSE(IsPlay(g, {M({kRight}, "*"), M({kLeft}, "tt")}));
}

TEST(Arena, BangThreadsAndCanonicalForms) {
  Game g = Bang(Boolean(), 3);
  Play s{M({Thread(2)}, "*"), M({Thread(2)}, "tt"), M({Thread(0)}, "*")};
  Play t{M({Thread(1)}, "*"), M({Thread(1)}, "tt"), M({Thread(2)}, "*")};
  EXPECT_TRUE(IsPlay(g, s));
  EXPECT_TRUE(EquivPlays(g, s, t));
  Play c = CanonicalPlay(s);
  EXPECT_EQ(c[0].path[0], Thread(0));
  EXPECT_EQ(c[2].path[0], Thread(1));
  EXPECT_FALSE(IsPlay(g, {M({Thread(3)}, "*")}));
}

TEST(Arena, DecanonicalizeAllocatesLeastUnusedThread) {
  Game g = Lollipop(Bang(Boolean(), 2), Boolean());
  Play s{M({kRight}, "*")};
  Canonical c = Canonicalize(s);
  Move m = Decanonicalize(g, c, M({kLeft, Thread(0)}, "*"));
  EXPECT_EQ(m.path[1], Thread(0));
  Game g1 = Lollipop(Bang(Boolean(), 1), Boolean());
  Play u{M({kRight}, "*"), M({kLeft, Thread(0)}, "*"), M({kLeft, Thread(0)}, "tt")};
  Canonical cu = Canonicalize(u);
  u.push_back(M({kRight}, "tt"));
  EXPECT_THROW(Decanonicalize(g1, cu, M({kLeft, Thread(1)}, "*")), Error);
}

TEST(Arena, ParseAndPrintRoundTrip) {
  for (std::string text : {"I", "flat{tt,ff}", "(!2 flat{a,b} -o flat{c})",
                           "((flat{x} & flat{y}) * !1 I)"}) {
    Game g = ParseGame(text);
    EXPECT_TRUE(SameShape(ParseGame(PrintGame(g)), g)) << text;
  }
  EXPECT_THROW(ParseGame("(flat{a} -o"), Error);
}

TEST(Arena, ExplicitSubgamesAreOrdered) {
  Game b = Boolean();
  Game only_tt = ExplicitSubgame(b, {{M({}, "*"), M({}, "tt")}});
  EXPECT_TRUE(SubgameLeq(only_tt, b));
  EXPECT_FALSE(SubgameLeq(b, only_tt));
  EXPECT_FALSE(IsPlay(only_tt, {M({}, "*"), M({}, "ff")}));
}

TEST(Arena, EnumeratePlaysOfSmallGame) {
  EXPECT_EQ(EnumeratePlays(Boolean()).size(), 4u);
}

}  // namespace
}  // namespace dttg
