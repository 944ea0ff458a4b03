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

#include "dttg/strategy.h"

namespace dttg {
namespace {

Move M(std::vector<Tag> path, std::string base) { return {std::move(path), std::move(base)}; }

TEST(Strategy, BooleanHasTwoWinningStrategies) {
  EXPECT_EQ(EnumerateWinning(Boolean()).size(), 2u);
}

TEST(Strategy, BoolToBoolCounts) {
  EXPECT_EQ(EnumerateWinning(Arrow(Boolean(), Boolean(), 1)).size(), 6u);
  EXPECT_EQ(EnumerateWinning(Arrow(Boolean(), Boolean(), 2)).size(), 38u);
}

TEST(Strategy, CopycatIsWinningAndUnit) {
  Game b = Boolean();
  Strategy id = Copycat(b);
  EXPECT_TRUE(id.winning());
  Strategy neg = Strategy::Explore(Lollipop(b, b), [](const Play& s) -> std::optional<Move> {
    if (s.size() == 1) return M({kLeft}, "*");
    return M({kRight}, s.back().base == "tt" ? "ff" : "tt");
  });
  EXPECT_TRUE(neg.winning());
  EXPECT_TRUE(StrategiesEqual(Compose(id, neg), neg));
  EXPECT_TRUE(StrategiesEqual(Compose(neg, id), neg));
  EXPECT_TRUE(StrategiesEqual(Compose(neg, neg), id));
}

TEST(Strategy, StrictModeRejectsIllegalResponse) {
  Game g = Flat({"0", "1"});
  ResponseMap r;
  r[PlayKey({M({}, "*")})] = M({}, "7");
  EXPECT_THROW(Strategy::FromResponses(g, r), Error);
  Strategy lenient = Strategy::FromResponses(g, r, Strictness::kLenient);
  EXPECT_FALSE(lenient.winning());
  EXPECT_EQ(lenient.plays().size(), 1u);
}

TEST(Strategy, PromotedDerelictionIsIdentity) {
  Game b = Boolean();
  for (int k = 1; k <= 3; ++k) {
    Strategy der = Dereliction(b, 1);
    Strategy promoted = Promote(der, k);
    EXPECT_TRUE(StrategiesEqual(promoted, Copycat(Bang(b, k)))) << k;
  }
}

TEST(Strategy, CokleisliUnitLaws) {
  Game b = Boolean();
  for (const Strategy& f : EnumerateWinning(Arrow(b, b, 2))) {
    EXPECT_TRUE(StrategiesEqual(CokleisliCompose(Dereliction(b, 2), f), f));
    Strategy g = CokleisliCompose(f, Dereliction(b, 1));
    EXPECT_TRUE(StrategiesEqual(g, f));
  }
}

TEST(Strategy, DiggingRowAndColumnAgreeUpToEquivalence) {
  Game b = Boolean();
  EXPECT_TRUE(StrategiesEqual(Digging(b, 2, 2, false), Digging(b, 2, 2, true)));
  EXPECT_TRUE(Digging(b, 2, 2).winning());
}

TEST(Strategy, DerelictionSkeletonIsHistoryFree) {
  Game g = Lollipop(Bang(Boolean(), 2), Boolean());
  MoveFunction f = [](const Move& m) -> std::optional<Move> {
    if (m.path.front() == kRight) return Move{{kLeft, Thread(0)}, m.base};
    return Move{{kRight}, m.base};
  };
  EXPECT_TRUE(SkeletonHistoryFree(g, f));
}

}  // namespace
}  // namespace dttg
