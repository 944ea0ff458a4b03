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

#include <chrono>

#include "dttg/depgame.h"
#include "dttg/fixtures.h"

namespace dttg {
namespace {

using namespace calendar;

Move M(std::vector<Tag> path, std::string base) { return {std::move(path), std::move(base)}; }

// Independent oracle: filter the full enumeration.
std::vector<std::string> FilterOracle(const Game& a, const Observation& obs) {
  std::vector<std::string> out;
  for (const Strategy& s : EnumerateWinning(a)) {
    if (obs.Within(s)) out.push_back(s.key());
  }
  return out;
}

std::vector<std::string> Keys(const std::vector<Strategy>& ss) {
  std::vector<std::string> out;
  for (const auto& s : ss) out.push_back(s.key());
  return out;
}

TEST(Observed, EmptyAndOddPlays) {
  EXPECT_TRUE(Observed({}).empty());
  EXPECT_TRUE(Observed({M({Thread(0)}, "*")}).empty());
}

TEST(Observed, AnsweredQuestion) {
  Observation obs = Observed({M({Thread(3)}, "*"), M({Thread(3)}, "1984")});
  ASSERT_EQ(obs.plays.size(), 1u);
  EXPECT_EQ(obs.plays[0], (Play{M({}, "*"), M({}, "1984")}));
}

TEST(Observed, MonotoneInPrefixes) {
  Play s{M({Thread(0)}, "*"), M({Thread(0)}, "1984"), M({Thread(1)}, "*"), M({Thread(1)}, "1985")};
  for (std::size_t n = 0; n < s.size(); ++n) {
    Observation a = Observed(Play(s.begin(), s.begin() + n));
    Observation b = Observed(Play(s.begin(), s.begin() + n + 1));
    EXPECT_TRUE(std::includes(b.keys.begin(), b.keys.end(), a.keys.begin(), a.keys.end()));
  }
}

TEST(ApplyDep, DaysTable) {
  DependentGame days = Days();
  EXPECT_FALSE(IsPlay(days.Bottom(), {M({}, "*"), M({}, "0")}));
  EXPECT_TRUE(IsPlay(days.Bottom(), {M({}, "*")}));
  Game leap = days.At({Point(Years(), "1984")});
  Game plain = days.At({Point(Years(), "1983")});
  EXPECT_TRUE(IsPlay(leap, {M({}, "*"), M({}, "365")}));
  EXPECT_FALSE(IsPlay(plain, {M({}, "*"), M({}, "365")}));
  EXPECT_TRUE(IsPlay(plain, {M({}, "*"), M({}, "364")}));
  EXPECT_TRUE(SubgameLeq(days.Bottom(), leap));
}

TEST(ApplyDep, RejectsNonMonotoneTables) {
  Game b = Boolean();
  std::vector<DependentGame::Entry> table{
      {{EmptyStrategy(b)}, FlatSubgame(b, {"tt"})},
      {{Point(b, "tt")}, FlatSubgame(b, {"ff"})},
  };
  EXPECT_THROW(DependentGame::FromTable(b, {b}, table), Error);
  table.pop_back();
  table.push_back({{EmptyStrategy(b)}, FlatSubgame(b, {})});
  EXPECT_THROW(DependentGame::FromTable(b, {b}, table), Error);
}

TEST(ConsistentExtensions, EmptyObservationOnBool) {
  EXPECT_EQ(ConsistentExtensions(Boolean(), {}).size(), 2u);
}

TEST(ConsistentExtensions, PinsTheYear) {
  Observation obs;
  obs.Add({M({}, "*"), M({}, "1984")});
  auto got = ConsistentExtensions(Years(), obs);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_TRUE(StrategiesEqual(got[0], Point(Years(), "1984")));
  EXPECT_EQ(Keys(got), FilterOracle(Years(), obs));
}

TEST(ConsistentExtensions, NaughtyOpponent) {
  Observation obs;
  obs.Add({M({}, "*"), M({}, "1984")});
  obs.Add({M({}, "*"), M({}, "1985")});
  EXPECT_TRUE(ConsistentExtensions(Years(), obs).empty());
  EXPECT_TRUE(FilterOracle(Years(), obs).empty());
}

TEST(ConsistentExtensions, AgreesWithOracleOnArrow) {
  Game g = Arrow(Boolean(), Boolean(), 2);
  Observation obs;
  obs.Add({M({kRight}, "*"), M({kLeft, Thread(0)}, "*")});
  EXPECT_EQ(Keys(ConsistentExtensions(g, obs)), FilterOracle(g, obs));
  obs.Add({M({kRight}, "*"), M({kLeft, Thread(0)}, "*"), M({kLeft, Thread(0)}, "tt"),
           M({kRight}, "ff")});
  EXPECT_EQ(Keys(ConsistentExtensions(g, obs)), FilterOracle(g, obs));
  EXPECT_FALSE(FilterOracle(g, obs).empty());
}

TEST(PiGame, ExampleColumnsValidate) {
  for (int col = 1; col <= 4; ++col) {
    Strategy s = Column(col, 2);
    EXPECT_TRUE(s.winning()) << col;
  }
}

TEST(PiGame, ConstantAnswerIsRejected) {
  Play f{M({kRight}, "*"), M({kRight}, "365")};
  EXPECT_THROW(StrategyFromPlays(DaysFunctions(2), {f}), Error);
  Strategy lenient = StrategyFromPlays(DaysFunctions(2), {f}, Strictness::kLenient);
  EXPECT_FALSE(lenient.winning());
  EXPECT_EQ(lenient.plays().size(), 1u);
  // 1983;f leaves days(1983).
  Strategy on_total = StrategyFromPlays(Arrow(Years(), DaysTotal(), 2), {f}, Strictness::kLenient);
  Strategy y = Point(Years(), "1983");
  Strategy composed = Substitute(DaysTotal(), 0, std::span<const Strategy>(&y, 1), on_total);
  EXPECT_TRUE(composed.Contains(Play{M({}, "*"), M({}, "365")}));
  EXPECT_FALSE(IsPlay(Days().At({y}), {M({}, "*"), M({}, "365")}));
}

TEST(PiGame, PlayerMovesInTheFibre) {
  DependentGame pi = PiGame(DependentGame::Constant(Years()), Days(), 2);
  Game g = pi.Bottom();
  EXPECT_TRUE(IsPlay(g, {M({kRight}, "*"), M({kLeft, Thread(0)}, "*"), M({kLeft, Thread(0)}, "1984"),
                         M({kRight}, "365")}));
  EXPECT_TRUE(IsPlay(g, {M({kRight}, "*"), M({kRight}, "364")}));
  EXPECT_FALSE(IsPlay(g, {M({kRight}, "*"), M({kRight}, "365")}));
}

TEST(Osat, NaughtyOpponentFreesPlayer) {
  Game g = DaysFunctions(2);
  Play s{M({kRight}, "*"), M({kLeft, Thread(0)}, "*"), M({kLeft, Thread(0)}, "1983"),
         M({kLeft, Thread(1)}, "*"), M({kLeft, Thread(1)}, "1984")};
  ASSERT_TRUE(IsPlay(g, s));
  s.push_back(M({kRight}, "365"));
  EXPECT_TRUE(IsPlay(g, s));
}

TEST(Osat, OpponentMovesAreFree) {
  Game g = DaysEndoFunctions(1);
  Play s{M({kRight, kRight}, "*"), M({kRight, kLeft, Thread(0)}, "*"),
         M({kRight, kLeft, Thread(0)}, "365")};
  EXPECT_TRUE(IsPlay(g, s));
  // In the Π-game O must stay inside some fibre; 365 is in days(1984).
  DependentGame pi = PiGame(DependentGame::Constant(Years()), DaysEndo(1), 1);
  EXPECT_TRUE(IsPlay(pi.Bottom(), s));
}

TEST(Osat, NonDependentAgreesWithArrow) {
  Game b = Boolean();
  Game osat = Osat(DependentGame::Constant(b), DependentGame::Constant(b, {b}), 2);
  Game plain = Arrow(b, b, 2);
  auto a = EnumerateWinning(osat);
  auto c = EnumerateWinning(plain);
  ASSERT_EQ(a.size(), c.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(StrategiesEqual(a[i], c[i]));
  auto pa = EnumeratePlays(osat), pc = EnumeratePlays(plain);
  EXPECT_EQ(pa.size(), pc.size());
}

TEST(Osat, DerelictedCopycatIsWinning) {
  Game g = DaysEndoFunctions(2);
  Strategy v = Strategy::Explore(g, [](const Play& s) -> std::optional<Move> {
    const Move& o = s.back();
    if (o.path == std::vector<Tag>{kRight, kRight}) return M({kRight, kLeft, Thread(0)}, o.base);
    if (o.path[1] == kLeft) return M({kRight, kRight}, o.base);
    return std::nullopt;
  });
  EXPECT_TRUE(v.winning());
}

TEST(MultiPi, LyricsExamples) {
  ContextGame ctx({DependentGame::Constant(Years()), Days()});
  Game g = MultiPi(ctx, Lyrics(), 1);
  std::vector<Tag> year{kLeft, Thread(0)};
  std::vector<Tag> day{kRight, kLeft, Thread(0)};
  std::vector<Tag> out{kRight, kRight};
  EXPECT_TRUE(IsPlay(g, {M(out, "*"), M(day, "*"), M(day, "250"), M(year, "*"), M(year, "1987"),
                         M(out, "Never Gonna Give You Up")}));
  EXPECT_FALSE(IsPlay(g, {M(out, "*"), M(day, "*"), M(day, "100"), M(year, "*"), M(year, "1987"),
                          M(out, "Never Gonna Give You Up")}));
  EXPECT_TRUE(IsPlay(g, {M(out, "*"), M(year, "*"), M(year, "1988"), M(out, "Never Gonna Let You Down")}));
  EXPECT_FALSE(IsPlay(g, {M(out, "*"), M(year, "*"), M(year, "1988"), M(out, "Together Forever")}));
}

TEST(MultiPi, EmptyContextIsTheGameItself) {
  Game b = Boolean();
  Game g = MultiPi(ContextGame(), DependentGame::Constant(b), 1);
  EXPECT_EQ(EnumerateWinning(g).size(), 2u);
  EXPECT_EQ(EnumeratePlays(g).size(), EnumeratePlays(b).size());
}

}  // namespace
}  // namespace dttg
