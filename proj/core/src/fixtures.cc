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

#include "dttg/fixtures.h"

namespace dttg {

Game FlatSubgame(const Game& flat, const std::vector<std::string>& answers) {
  Move q{{}, std::string(kQuestionName)};
  std::vector<Play> plays{{q}};
  for (const auto& a : answers) plays.push_back({q, Move{{}, a}});
  return ExplicitSubgame(flat, plays);
}

Strategy Point(const Game& flat, const std::string& answer) {
  return ConstantStrategy(flat, answer);
}

namespace calendar {

std::vector<int> YearList() { return {1983, 1984, 1985, 1986, 1987, 1988}; }

bool IsLeap(int year) { return year % 4 == 0 && (year % 100 != 0 || year % 400 == 0); }

Game Years() {
  static const Game g = [] {
    std::vector<std::string> answers;
    for (int y : YearList()) answers.push_back(std::to_string(y));
    return Flat(answers, "years");
  }();
  return g;
}

Game DaysTotal() {
  static const Game g = [] {
    std::vector<std::string> answers;
    for (int d = 0; d <= 365; ++d) answers.push_back(std::to_string(d));
    return Flat(answers, "days");
  }();
  return g;
}

namespace {

std::vector<std::string> Range(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

DependentGame Days() {
  static const DependentGame d = [] {
    std::vector<DependentGame::Entry> table;
    table.push_back({{EmptyStrategy(Years())}, FlatSubgame(DaysTotal(), {})});
    for (int y : YearList()) {
      table.push_back({{Point(Years(), std::to_string(y))},
                       FlatSubgame(DaysTotal(), Range(IsLeap(y) ? 366 : 365))});
    }
    return DependentGame::FromTable(DaysTotal(), {Years()}, std::move(table), "days");
  }();
  return d;
}

const std::vector<Song>& Songs() {
  static const std::vector<Song> songs = {
      {"Never Gonna Give You Up", 1987, 206},
      {"Never Gonna Let You Down", 1987, 206},
      {"Whenever You Need Somebody", 1987, 300},
      {"Together Forever", 1988, 30},
  };
  return songs;
}

DependentGame Lyrics() {
  static const DependentGame ra = [] {
    std::vector<std::string> lines;
    for (const Song& s : Songs()) lines.push_back(s.line);
    Game total = Flat(lines, "RA");
    auto released = [](int year, int day) {
      std::vector<std::string> out;
      for (const Song& s : Songs()) {
        if (s.year < year || (s.year == year && s.day < day)) out.push_back(s.line);
      }
      return out;
    };
    Strategy no_year = EmptyStrategy(Years());
    Strategy no_day = EmptyStrategy(DaysTotal());
    std::vector<DependentGame::Entry> table;
    table.push_back({{no_year, no_day}, FlatSubgame(total, {})});
    for (int y : YearList()) {
      Strategy year = Point(Years(), std::to_string(y));
      table.push_back({{year, no_day}, FlatSubgame(total, released(y, 0))});
      for (int m = 0; m <= 365; ++m) {
        table.push_back({{year, Point(DaysTotal(), std::to_string(m))},
                         FlatSubgame(total, released(y, m))});
      }
    }
    return DependentGame::FromTable(total, {Years(), DaysTotal()}, std::move(table), "RA");
  }();
  return ra;
}

DependentGame DaysEndo(int k) {
  Game total = Lollipop(Bang(DaysTotal(), k), DaysTotal());
  return DependentGame::FromFunction(
      total, {Years()},
      [k](std::span<const Strategy> args) {
        Game d = Days().At(args);
        return Lollipop(Bang(d, k), d);
      },
      "!days -o days");
}

Game DaysFunctions(int k) {
  return Osat(DependentGame::Constant(Years()), Days(), k);
}

Game DaysEndoFunctions(int k) {
  return Osat(DependentGame::Constant(Years()), DaysEndo(k), k);
}

Strategy Column(int column, int k) {
  auto m = [](std::vector<Tag> path, std::string base) { return Move{std::move(path), std::move(base)}; };
  if (column == 4) {
    return Strategy::Explore(DaysEndoFunctions(k), [&](const Play& s) -> std::optional<Move> {
      const Move& o = s.back();
      if (o.path == std::vector<Tag>{kRight, kRight}) return m({kRight, kLeft, Thread(0)}, "*");
      if (o.path.size() == 3 && o.path[1] == kLeft) return m({kRight, kRight}, o.base);
      return std::nullopt;
    });
  }
  return Strategy::Explore(DaysFunctions(k), [&](const Play& s) -> std::optional<Move> {
    const Move& o = s.back();
    if (o.path == std::vector<Tag>{kRight}) {
      if (column == 1) return m({kRight}, "364");
      return m({kLeft, Thread(0)}, "*");
    }
    int year = std::stoi(o.base);
    if (column == 2) return m({kRight}, IsLeap(year) ? "365" : "364");
    if (o.path[1] == Thread(0)) {
      if (year == 1984) return m({kLeft, Thread(1)}, "*");
      return m({kRight}, "364");
    }
    return m({kRight}, "365");
  });
}

}  // namespace calendar
}  // namespace dttg
