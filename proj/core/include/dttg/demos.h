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

#ifndef DTTG_DEMOS_H_
#define DTTG_DEMOS_H_

#include <string>
#include <utility>
#include <vector>

#include "dttg/arena.h"
#include "dttg/error.h"

namespace dttg {

struct DemoConfig {
  int bound = 3;
  Limits limits;
};

struct DemoReport {
  std::string name;
  bool passed = false;
  std::string summary;
  // Named observations in a fixed order.
  std::vector<std::pair<std::string, std::string>> facts;
  // Human-readable trace, plays laid out in columns.
  std::vector<std::string> trace;
};

const std::vector<std::string>& DemoNames();

// Unknown names raise kDemoFailed. With `require` set, a failed verdict
// raises kDemoFailed carrying the trace.
DemoReport RunDemo(const std::string& name, const DemoConfig& config = {}, bool require = false);

// One line per move; a column per component of a curried game with
// columns.size() - 1 arguments, then the O/P label.
std::vector<std::string> FormatPlay(const Play& s, const std::vector<std::string>& columns);

}  // namespace dttg

#endif  // DTTG_DEMOS_H_
