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

#include "dttg/serialize.h"

#include <nlohmann/json.hpp>

#include "dttg/error.h"

namespace dttg {

namespace {

using nlohmann::json;

json PathJson(const std::vector<Tag>& path) {
  json out = json::array();
  for (Tag t : path) {
    if (t == kLeft) {
      out.push_back("L");
    } else if (t == kRight) {
      out.push_back("R");
    } else {
      out.push_back("t" + std::to_string(ThreadIndex(t)));
    }
  }
  return out;
}

std::vector<Tag> PathFrom(const json& j) {
  std::vector<Tag> out;
  for (const auto& t : j) {
    std::string s = t.get<std::string>();
    if (s == "L") {
      out.push_back(kLeft);
    } else if (s == "R") {
      out.push_back(kRight);
    } else if (s.size() > 1 && s[0] == 't') {
      out.push_back(Thread(std::stoi(s.substr(1))));
    } else {
      throw Error(ErrorCode::kMalformedPlay, "bad path tag " + s);
    }
  }
  return out;
}

json MoveJson(const Move& m) { return {{"path", PathJson(m.path)}, {"base", m.base}}; }

json PlayJson(const Game& g, const Play& s) {
  auto just = Justifiers(g, s);
  json out = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    json m = MoveJson(s[i]);
    m["justifier"] = just ? (*just)[i] : -1;
    out.push_back(std::move(m));
  }
  return out;
}

Move MoveFrom(const json& j) { return {PathFrom(j.at("path")), j.at("base").get<std::string>()}; }

Play PlayFrom(const json& j) {
  Play s;
  for (const auto& m : j) s.push_back(MoveFrom(m));
  return s;
}

json PlaysJson(const Game& g, const std::vector<Play>& plays) {
  json out = json::array();
  for (const Play& p : plays) {
    if (!p.empty()) out.push_back(PlayJson(g, p));
  }
  return out;
}

std::vector<Play> PlaysFrom(const json& j) {
  std::vector<Play> out;
  for (const auto& p : j) out.push_back(PlayFrom(p));
  return out;
}

// All plays of a finite game, for fibres.
std::vector<Play> GamePlays(const Game& g) { return EnumeratePlays(g); }

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

template <typename F>
auto Guard(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed fixture: ") + e.what());
  }
}

}  // namespace

std::string PlayToJson(const Game& g, const Play& s) { return PlayJson(g, s).dump(); }

Play PlayFromJson(std::string_view text) {
  return Guard([&] { return PlayFrom(Parse(text)); });
}

std::string StrategyToJson(const Strategy& s) {
  json skeleton = json::array();
  std::set<std::string> seen;
  for (const Play& p : s.plays()) {
    if (p.size() < 2) continue;
    json pair = json::array({MoveJson(p[p.size() - 2]), MoveJson(p.back())});
    if (seen.insert(pair.dump()).second) skeleton.push_back(std::move(pair));
  }
  return json{{"game", PrintGame(s.game())}, {"skeleton", skeleton}, {"plays", PlaysJson(s.game(), s.plays())}}
      .dump();
}

Strategy StrategyFromJson(std::string_view text, Strictness mode) {
  return Guard([&] {
    json j = Parse(text);
    Game g = ParseGame(j.at("game").get<std::string>());
    return StrategyFromPlays(g, PlaysFrom(j.at("plays")), mode);
  });
}

std::string DependentGameToJson(const DependentGame& d) {
  const auto* table = d.table();
  if (!table) throw Error(ErrorCode::kMismatchedGames, "only table-based dependent games serialize");
  json base = json::array();
  for (const Game& b : d.base()) base.push_back(PrintGame(b));
  json rows = json::array();
  for (const auto& e : *table) {
    json key = json::array();
    for (const Strategy& s : e.key) key.push_back(PlaysJson(s.game(), s.plays()));
    rows.push_back({{"key", key}, {"plays", PlaysJson(d.total(), GamePlays(e.game))}});
  }
  return json{{"name", d.name()}, {"total", PrintGame(d.total())}, {"base", base}, {"table", rows}}.dump();
}

DependentGame DependentGameFromJson(std::string_view text) {
  return Guard([&] {
    json j = Parse(text);
    Game total = ParseGame(j.at("total").get<std::string>());
    std::vector<Game> base;
    for (const auto& b : j.at("base")) base.push_back(ParseGame(b.get<std::string>()));
    std::vector<DependentGame::Entry> table;
    for (const auto& row : j.at("table")) {
      DependentGame::Entry e;
      const auto& key = row.at("key");
      if (key.size() != base.size()) throw Error(ErrorCode::kMismatchedGames, "key arity differs from base");
      for (std::size_t i = 0; i < base.size(); ++i) e.key.push_back(StrategyFromPlays(base[i], PlaysFrom(key[i])));
      e.game = ExplicitSubgame(total, PlaysFrom(row.at("plays")));
      table.push_back(std::move(e));
    }
    return DependentGame::FromTable(total, base, std::move(table), j.value("name", ""));
  });
}

std::string FamilyToJson(const FiniteFamily& f) {
  json points = json::array();
  for (const auto& p : f.points) {
    points.push_back({{"name", p.name}, {"value", PlaysJson(f.base, p.value.plays())}, {"constructors", p.constructors}});
  }
  return json{{"name", f.family.name()}, {"base", PrintGame(f.base)}, {"points", points}}.dump();
}

FiniteFamily FamilyFromJson(std::string_view text) {
  return Guard([&] {
    json j = Parse(text);
    Game base = ParseGame(j.at("base").get<std::string>());
    std::vector<FiniteFamily::Point> points;
    for (const auto& p : j.at("points")) {
      points.push_back({p.at("name").get<std::string>(), StrategyFromPlays(base, PlaysFrom(p.at("value"))),
                        p.at("constructors").get<std::vector<std::string>>()});
    }
    return MakeFamily(base, std::move(points), j.value("name", ""));
  });
}

}  // namespace dttg
