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

// Property suites for the categorical structure and the CwF equations,
// evaluated on sampled winning strategies.

#ifndef DTTG_LAWS_H_
#define DTTG_LAWS_H_

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dttg/arena.h"
#include "dttg/error.h"

namespace dttg {

struct LawConfig {
  int samples = 2;
  int random_contexts = 20;
  std::uint64_t seed = 2026;
  Limits limits;
  // When set, the calendar and RA games are read from days.json and ra.json
  // in this directory instead of being built in code.
  std::string fixtures_dir;
};

struct LawResult {
  std::string name;
  int checked = 0;
  int passed = 0;
  // Instances skipped because an operand needed more threads than its bound.
  int bound_exceeded = 0;
  std::vector<std::string> failures;
  // Labels of the instances that passed.
  std::set<std::string> covered;

  bool ok() const { return checked > 0 && passed == checked; }
};

// The sampled game suite: I, flat games with one to three answers, and
// ⊗, &, ⊸ and !2 built from them.
std::vector<std::pair<std::string, Game>> LawGames();

std::vector<LawResult> CategoricalLaws(const LawConfig& config = {});
// Ty-Id, Ty-Comp, Tm-Id, Tm-Comp, Cons-L, Cons-R, Cons-Id, Cons-Nat.
std::vector<LawResult> CwfLaws(const LawConfig& config = {});

}  // namespace dttg

#endif  // DTTG_LAWS_H_
