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

// Built-in example games: the calendar (years, days, lyrics) and helpers for
// flat subgames.

#ifndef DTTG_FIXTURES_H_
#define DTTG_FIXTURES_H_

#include <string>
#include <vector>

#include "dttg/depgame.h"

namespace dttg {

// Subgame of a flat game allowing only `answers` (possibly none).
Game FlatSubgame(const Game& flat, const std::vector<std::string>& answers);
// Constant strategy on a flat game, as a parameter value.
Strategy Point(const Game& flat, const std::string& answer);

namespace calendar {

// Years 1983..1988.
Game Years();
std::vector<int> YearList();
bool IsLeap(int year);
// 0..365.
Game DaysTotal();
// days(n) = answers below 365 or 366; days(⊥) has no answers.
DependentGame Days();
// Lyrics released before day m of year n.
DependentGame Lyrics();
struct Song {
  std::string line;
  int year;
  int day;
};
const std::vector<Song>& Songs();

// !days -o days as a game depending on years.
DependentGame DaysEndo(int k);

// The four example strategies: columns 1-3 on Osat(Π_{!years} days),
// column 4 on Osat(Π_{!years} (!days -o days)).
Game DaysFunctions(int k);
Game DaysEndoFunctions(int k);
Strategy Column(int column, int k);

}  // namespace calendar
}  // namespace dttg

#endif  // DTTG_FIXTURES_H_
