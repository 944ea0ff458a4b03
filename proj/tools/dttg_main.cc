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

// dttg: check, evaluate, compare and trace dtt programs in the game model.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dttg/demos.h"
#include "dttg/dtt.h"
#include "dttg/interp.h"
#include "dttg/laws.h"
#include "dttg/serialize.h"

namespace {

using nlohmann::json;

struct RunConfig {
  int bound = 3;
  std::size_t max_interaction = dttg::Limits{}.max_interaction;
  std::size_t max_enum = dttg::Limits{}.max_enum;
  std::string format = "text";

  dttg::Limits limits() const { return {max_interaction, max_enum}; }
  bool json() const { return format == "json"; }
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dttg::Error(dttg::ErrorCode::kParse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dttg::dtt::Signature Load(const std::string& path) {
  dttg::dtt::Signature sig;
  sig.Load(ReadFile(path));
  return sig;
}

int ExitCode(dttg::ErrorCode c) {
  switch (c) {
    case dttg::ErrorCode::kParse:
    case dttg::ErrorCode::kType:
    case dttg::ErrorCode::kDuplicatePoint:
    case dttg::ErrorCode::kDuplicateConstructor:
    case dttg::ErrorCode::kDemoFailed:
    case dttg::ErrorCode::kIllTypedWitness:
      return 1;
    default:
      return 2;
  }
}

std::string Abbrev(const std::string& s, std::size_t width = 120) {
  return s.size() <= width ? s : s.substr(0, width) + "...";
}

// Column headers for a curried game: one per argument, then the result.
std::vector<std::string> Columns(const dttg::Game& g) {
  std::vector<std::string> out;
  dttg::Game cur = dttg::Total(g);
  while (cur->kind == dttg::GameKind::kLollipop) {
    out.push_back(Abbrev(dttg::PrintGame(cur->left), 24));
    cur = dttg::Total(cur->right);
  }
  out.push_back(Abbrev(dttg::PrintGame(cur), 24));
  return out;
}

void Emit(const RunConfig& rc, const json& j, const std::vector<std::string>& text) {
  if (rc.json()) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& line : text) std::cout << line << "\n";
  }
}

int Check(const RunConfig& rc, const std::string& file) {
  dttg::dtt::Signature sig = Load(file);
  json j{{"file", file}, {"ok", true}, {"declarations", sig.Decls().size()},
         {"definitions", sig.DefOrder()}};
  Emit(rc, j, {"ok: " + file + " (" + std::to_string(sig.Decls().size()) + " declarations)"});
  return 0;
}

int Eval(const RunConfig& rc, const std::string& file, const std::string& name, std::size_t limit) {
  dttg::dtt::Signature sig = Load(file);
  const auto* def = sig.Def(name);
  if (!def) throw dttg::Error(dttg::ErrorCode::kType, "unknown definition " + name);
  dttg::Interpreter in(sig, dttg::Cwf(rc.bound, rc.limits()));
  dttg::Term t = in.Definition(name);
  json j{{"definition", name}, {"type", dttg::dtt::Print(def->type)}, {"parts", json::array()}};
  std::vector<std::string> text{name + " : " + dttg::dtt::Print(def->type)};
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    const dttg::Strategy& s = t.parts[i];
    j["parts"].push_back(json::parse(dttg::StrategyToJson(s)));
    j["parts"].back()["winning"] = s.winning();
    text.push_back("part " + std::to_string(i) + ": " + (s.winning() ? "winning" : "not winning") +
                   ", " + std::to_string(s.plays().size()) + " plays, " +
                   std::to_string(s.responses().size()) + " responses");
    text.push_back("  game " + Abbrev(dttg::PrintGame(s.game())));
    std::size_t shown = 0;
    for (const auto& [pos, move] : s.responses()) {
      if (shown++ == limit) {
        text.push_back("  ... " + std::to_string(s.responses().size() - limit) + " more");
        break;
      }
      text.push_back("  " + pos + " -> " + dttg::ToString(move));
    }
  }
  Emit(rc, j, text);
  return 0;
}

int Equal(const RunConfig& rc, const std::string& file, const std::string& lhs, const std::string& rhs,
          const std::string& type_text) {
  dttg::dtt::Signature sig = Load(file);
  auto l = dttg::dtt::ParseExpr(lhs);
  auto r = dttg::dtt::ParseExpr(rhs);
  dttg::dtt::ExprPtr type = type_text.empty() ? dttg::dtt::Infer(sig, {}, l).type
                                              : dttg::dtt::CheckType(sig, {}, dttg::dtt::ParseExpr(type_text));
  dttg::Interpreter in(sig, dttg::Cwf(rc.bound, rc.limits()));
  bool semantic = dttg::SemanticEqual(in, l, r, type);
  bool definitional = dttg::dtt::DefEq(sig, {}, dttg::dtt::Check(sig, {}, l, type),
                                       dttg::dtt::Check(sig, {}, r, type), type);
  json j{{"type", dttg::dtt::Print(type)}, {"equal", semantic}, {"definitional", definitional}};
  Emit(rc, j, {semantic ? "equal" : "not equal"});
  return 0;
}

json ScriptJson(const std::string& script) {
  std::string text = script;
  if (!script.empty() && script.front() != '[') text = ReadFile(script);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw dttg::Error(dttg::ErrorCode::kParse, std::string("opponent script: ") + e.what());
  }
}

int Trace(const RunConfig& rc, const std::string& file, const std::string& name, const std::string& script) {
  dttg::dtt::Signature sig = Load(file);
  if (!sig.Def(name)) throw dttg::Error(dttg::ErrorCode::kType, "unknown definition " + name);
  dttg::Interpreter in(sig, dttg::Cwf(rc.bound, rc.limits()));
  dttg::Term t = in.Definition(name);
  json moves = ScriptJson(script);
  std::size_t part = 0;
  json j{{"definition", name}, {"part", part}, {"illegal", nullptr}, {"stopped", false}};
  const dttg::Strategy& s = t.parts.at(part);
  dttg::Play play;
  std::vector<std::string> notes;
  for (const auto& mj : moves) {
    dttg::Move m = dttg::PlayFromJson("[" + mj.dump() + "]").at(0);
    bool known = dttg::HasMove(dttg::Total(s.game()), m);
    auto legal = known ? dttg::LegalOpponentMoves(s.game(), play) : std::vector<dttg::Move>{};
    if (std::find(legal.begin(), legal.end(), m) == legal.end()) {
      j["illegal"] = mj;
      notes.push_back("illegal O-move " + dttg::ToString(m) + " after " + std::to_string(play.size()) +
                      " moves");
      break;
    }
    play.push_back(m);
    dttg::Canonical c = dttg::Canonicalize(play);
    auto r = s.Respond(c.play);
    if (!r) {
      j["stopped"] = true;
      notes.push_back("no response to " + dttg::ToString(m));
      break;
    }
    play.push_back(dttg::Decanonicalize(s.game(), c, *r));
  }
  j["play"] = json::parse(dttg::PlayToJson(s.game(), play));
  std::vector<std::string> text = dttg::FormatPlay(play, Columns(s.game()));
  text.insert(text.end(), notes.begin(), notes.end());
  Emit(rc, j, text);
  return 0;
}

int Demo(const RunConfig& rc, const std::string& name) {
  dttg::DemoReport r = dttg::RunDemo(name, {rc.bound, rc.limits()});
  json facts = json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  json j{{"demo", r.name}, {"passed", r.passed}, {"summary", r.summary}, {"facts", facts}, {"trace", r.trace}};
  std::vector<std::string> text{std::string(r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.summary};
  for (const auto& [k, v] : r.facts) text.push_back("  " + k + " = " + v);
  text.insert(text.end(), r.trace.begin(), r.trace.end());
  Emit(rc, j, text);
  return r.passed ? 0 : 1;
}

int Laws(const RunConfig& rc, int samples, int contexts, std::uint64_t seed, const std::string& fixtures) {
  dttg::LawConfig config{samples, contexts, seed, rc.limits(), fixtures};
  auto all = dttg::CategoricalLaws(config);
  auto cwf = dttg::CwfLaws(config);
  all.insert(all.end(), cwf.begin(), cwf.end());
  json j = json::array();
  std::vector<std::string> text;
  bool ok = true;
  for (const auto& r : all) {
    ok = ok && r.ok();
    j.push_back({{"law", r.name}, {"checked", r.checked}, {"passed", r.passed},
                 {"bound_exceeded", r.bound_exceeded}, {"failures", r.failures}});
    text.push_back(std::string(r.ok() ? "PASS " : "FAIL ") + r.name + ": " + std::to_string(r.passed) + "/" +
                   std::to_string(r.checked) + " (bound exceeded " + std::to_string(r.bound_exceeded) + ")");
    for (const auto& f : r.failures) text.push_back("  " + f);
  }
  Emit(rc, j, text);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Games for dependent types"};
  app.require_subcommand(1);
  RunConfig rc;
  if (const char* env = std::getenv("DTTG_BOUND")) {
    try {
      rc.bound = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "DTTG_BOUND must be a positive integer\n";
      return 2;
    }
  }
  app.add_option("--bound", rc.bound, "Bang bound K")->check(CLI::PositiveNumber);
  app.add_option("--max-interaction", rc.max_interaction, "Interaction length ceiling")->check(CLI::PositiveNumber);
  app.add_option("--max-enum", rc.max_enum, "Enumeration ceiling")->check(CLI::PositiveNumber);
  app.add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file, def, lhs, rhs, type, script, demo, fixtures;
  std::size_t limit = 40;
  int samples = 2, contexts = 20;
  std::uint64_t seed = 2026;

  auto* check = app.add_subcommand("check", "Parse and type-check a module");
  check->add_option("FILE", file)->required();
  auto* eval = app.add_subcommand("eval", "Denotation summary and skeleton of a definition");
  eval->add_option("FILE", file)->required();
  eval->add_option("--def", def)->required();
  eval->add_option("--limit", limit, "Skeleton lines shown");
  auto* equal = app.add_subcommand("equal", "Compare the denotations of two closed terms");
  equal->add_option("FILE", file)->required();
  equal->add_option("--lhs", lhs)->required();
  equal->add_option("--rhs", rhs)->required();
  equal->add_option("--type", type);
  auto* trace = app.add_subcommand("trace", "Play a definition against an Opponent script");
  trace->add_option("FILE", file)->required();
  trace->add_option("--def", def)->required();
  trace->add_option("--opponent", script, "JSON move list, inline or a file")->required();
  auto* demo_cmd = app.add_subcommand("demo", "Run a named demonstration");
  demo_cmd->add_option("NAME", demo)->required()->check(CLI::IsMember(dttg::DemoNames()));
  auto* laws = app.add_subcommand("laws", "Categorical and CwF law suites");
  laws->add_option("--samples", samples)->check(CLI::PositiveNumber);
  laws->add_option("--contexts", contexts)->check(CLI::NonNegativeNumber);
  laws->add_option("--seed", seed);
  laws->add_option("--fixtures", fixtures, "Directory holding days.json and ra.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (rc.bound < 1) {
    std::cerr << "bound must be positive\n";
    return 2;
  }

  try {
    if (*check) return Check(rc, file);
    if (*eval) return Eval(rc, file, def, limit);
    if (*equal) return Equal(rc, file, lhs, rhs, type);
    if (*trace) return Trace(rc, file, def, script);
    if (*demo_cmd) return Demo(rc, demo);
    if (*laws) return Laws(rc, samples, contexts, seed, fixtures);
  } catch (const dttg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
