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

// JSON forms of plays, strategies, dependent games and finite families.

#ifndef DTTG_SERIALIZE_H_
#define DTTG_SERIALIZE_H_

#include <string>
#include <string_view>
#include <vector>

#include "dttg/cwf.h"
#include "dttg/depgame.h"
#include "dttg/strategy.h"

namespace dttg {

// [{"path": ["R", "L", "t0"], "base": "*", "justifier": -1}, ...]
std::string PlayToJson(const Game& g, const Play& s);
Play PlayFromJson(std::string_view text);

// {"game": "...", "skeleton": [[o, p], ...], "plays": [[...], ...]}
std::string StrategyToJson(const Strategy& s);
Strategy StrategyFromJson(std::string_view text, Strictness mode = Strictness::kStrict);

// {"name", "total", "base": [...], "table": [{"key": [plays...], "plays": [...]}]}
// Keys list each parameter strategy by its plays; fibres by theirs.
std::string DependentGameToJson(const DependentGame& d);
DependentGame DependentGameFromJson(std::string_view text);

// {"name", "base", "points": [{"name", "value": plays, "constructors": [...]}]}
std::string FamilyToJson(const FiniteFamily& f);
FiniteFamily FamilyFromJson(std::string_view text);

}  // namespace dttg

#endif  // DTTG_SERIALIZE_H_
