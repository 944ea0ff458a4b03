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

#include "dttg/demos.h"

#include <algorithm>
#include <functional>
#include <map>

#include "dttg/cwf.h"
#include "dttg/fixtures.h"
#include "dttg/interp.h"

namespace dttg {

namespace {

using dtt::ParseExpr;

std::string Bool(bool b) { return b ? "true" : "false"; }

std::string ShowStrategy(const Strategy& s) {
  std::string out = "{ε";
  for (const Play& p : s.plays()) {
    if (p.empty()) continue;
    out += ", ";
    for (const Move& m : p) out += m.base;
  }
  return out + "}";
}

std::string ShowGame(const Game& g) {
  std::string out = "{";
  for (const Play& p : EnumeratePlays(g, 64)) {
    if (out.size() > 1) out += ", ";
    if (p.empty()) out += "ε";
    for (const Move& m : p) out += m.base;
  }
  return out + "}";
}

DemoReport I1(const DemoConfig& config) {
  DemoReport r{"i1", false, "", {}, {}};
  dtt::Signature sig;
  dtt::Telescope ctx{{"x", ParseExpr("Bool")}, {"y", ParseExpr("Bool")},
                     {"z", ParseExpr("Id Bool x y", {"x", "y"})}};
  bool defeq = dtt::DefEq(sig, ctx, dtt::MakeVar(2), dtt::MakeVar(1), ParseExpr("Bool"));
  Interpreter in(sig, Cwf(config.bound, config.limits));
  Term x = in.Interpret(ctx, dtt::MakeVar(2), ParseExpr("Bool"));
  Term y = in.Interpret(ctx, dtt::MakeVar(1), ParseExpr("Bool"));
  std::vector<Game> totals = in.Context(ctx).totals();
  std::vector<Strategy> args{EmptyStrategy(totals[0]), Point(totals[1], "tt"), EmptyStrategy(totals[2])};
  Strategy vx = in.cwf().Apply(x.parts[0], args, totals[0]);
  Strategy vy = in.cwf().Apply(y.parts[0], args, totals[1]);
  bool differ = !StrategiesEqual(vx, vy);
  r.passed = !defeq && differ;
  r.facts = {{"defeq(x, y)", Bool(defeq)}, {"x(⊥, tt, ⊥)", ShowStrategy(vx)},
             {"y(⊥, tt, ⊥)", ShowStrategy(vy)}, {"projections differ", Bool(differ)}};
  r.summary = "x, y : Bool, z : Id(x, y) ⊬ x ≡ y: the projections separate at ⟦x⟧ = ⟦z⟧ = ⊥, ⟦y⟧ = tt";
  r.trace = {"⟦x⟧ at (⊥, tt, ⊥) = " + ShowStrategy(vx), "⟦y⟧ at (⊥, tt, ⊥) = " + ShowStrategy(vy)};
  return r;
}

DemoReport I2(const DemoConfig& config) {
  DemoReport r{"i2", false, "", {}, {}};
  dtt::Signature sig;
  sig.Load("family B (b : Bool) { tt => b0 | b1 }");
  dtt::Telescope ctx{{"x", ParseExpr("Bool")}, {"y", ParseExpr("Bool")},
                     {"z", ParseExpr("Id Bool x y", {"x", "y"})}};
  dtt::ExprPtr bx = dtt::NormalizeType(sig, ctx, ParseExpr("B x", {"x", "y", "z"}));
  dtt::ExprPtr by = dtt::NormalizeType(sig, ctx, ParseExpr("B y", {"x", "y", "z"}));
  bool syntactic = dtt::AlphaEqual(bx, by);

  Game b = Boolean();
  Game unit = ExplicitSubgame(b, {});
  Strategy tt = Point(b, "tt"), ff = Point(b, "ff");
  DependentGame fam = DependentGame::FromTable(
      b, {b}, {{{EmptyStrategy(b)}, unit}, {{ff}, unit}, {{tt}, b}}, "B");
  Interpreter in(sig, Cwf(config.bound, config.limits));
  std::vector<Game> totals = in.Context(ctx).totals();
  std::vector<Strategy> args{EmptyStrategy(totals[0]), Point(totals[1], "tt"), EmptyStrategy(totals[2])};
  Game at_x = fam.At({args[0]});
  Game at_y = fam.At({args[1]});
  bool differ = !(SubgameLeq(at_x, at_y) && SubgameLeq(at_y, at_x));
  r.passed = !syntactic && differ;
  r.facts = {{"B ≡ B[y/x]", Bool(syntactic)}, {"B{x}(⊥, tt, ⊥)", ShowGame(at_x)},
             {"B{y}(⊥, tt, ⊥)", ShowGame(at_y)}, {"fibres differ", Bool(differ)}};
  r.summary = "x, y : Bool, z : Id(x, y) ⊬ B ≡ B[y/x] with ⟦B⟧ = (⊥, ff ↦ I, tt ↦ Bool)";
  r.trace = {"B{x} at (⊥, tt, ⊥) = " + ShowGame(at_x), "B{y} at (⊥, tt, ⊥) = " + ShowGame(at_y)};
  return r;
}

DemoReport I3(const DemoConfig& config) {
  DemoReport r{"i3", true, "", {}, {}};
  Cwf cwf(config.bound, config.limits);
  std::vector<std::pair<std::string, Game>> games;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> answers;
    for (int i = 0; i < n; ++i) answers.push_back("a" + std::to_string(i));
    games.push_back({"flat" + std::to_string(n), Flat(answers)});
  }
  games.push_back({"Bool ⇒ Bool (!1)", Arrow(Boolean(), Boolean(), 1)});
  std::size_t pairs = 0, inhabited = 0;
  for (const auto& [label, x] : games) {
    TyEntry a{ContextGame{}, {DependentGame::Constant(x)}};
    auto closed = EnumerateWinning(cwf.HomGame(ContextGame{}, a.entries[0]), config.limits);
    std::size_t here = 0;
    for (const Strategy& f : closed) {
      for (const Strategy& g : closed) {
        ++pairs;
        TyEntry id = cwf.Id(a, Term{ContextGame{}, a, {f}}, Term{ContextGame{}, a, {g}});
        auto proofs = EnumerateWinning(cwf.HomGame(ContextGame{}, id.entries[0]), config.limits);
        if (proofs.empty()) continue;
        ++inhabited;
        ++here;
        bool ok = StrategiesEqual(f, g);
        for (const Strategy& p : proofs) ok = ok && StrategiesEqual(p, f);
        if (!ok) {
          r.passed = false;
          r.trace.push_back("counterexample on " + label + ": " + ShowStrategy(f) + " vs " + ShowStrategy(g));
        }
      }
    }
    r.trace.push_back(label + ": " + std::to_string(closed.size()) + " closed terms, " + std::to_string(here) +
                      " inhabited identity types, all diagonal");
  }
  r.facts = {{"pairs checked", std::to_string(pairs)}, {"inhabited", std::to_string(inhabited)},
             {"inhabited implies equal", Bool(r.passed)}};
  r.summary = "⊢ p : Id(t, s) forces p = t = s on every flat game with at most 3 answers and on Bool ⇒ Bool";
  return r;
}

DemoReport FunExt(const DemoConfig& config) {
  DemoReport r{"funext", false, "", {}, {}};
  dtt::Signature sig;
  sig.Load("def strict : Bool → Bool := λx. if x then tt else tt\ndef lazy : Bool → Bool := λx. tt");
  Interpreter in(sig, Cwf(config.bound, config.limits));
  const Cwf& cwf = in.cwf();
  dtt::Telescope ctx{{"x", ParseExpr("Bool")}};
  TyEntry pointwise = in.Type(ctx, ParseExpr("Id Bool (strict x) (lazy x)", {"x"}));
  Term witness = in.Interpret(ctx, ParseExpr("strict x", {"x"}), ParseExpr("Bool"));
  Game hom = cwf.HomGame(pointwise.over, cwf.TermFibre(pointwise, {}, 0));
  bool pointwise_ok = Retype(witness.parts[0], hom).winning();
  Term lazy = in.Interpret(ctx, ParseExpr("lazy x", {"x"}), ParseExpr("Bool"));
  bool lazy_ok = Retype(lazy.parts[0], hom).winning();

  TyEntry global = in.Type({}, ParseExpr("Id (Bool → Bool) strict lazy"));
  Game fibre = global.entries[0].Bottom();
  auto proofs = EnumerateWinning(cwf.HomGame(ContextGame{}, global.entries[0]), config.limits);
  r.passed = pointwise_ok && proofs.empty();
  r.facts = {{"pointwise witness winning", Bool(pointwise_ok)},
             {"lazy pointwise witness winning", Bool(lazy_ok)},
             {"Π-level Id fibre", ShowGame(fibre)},
             {"Π-level proofs", std::to_string(proofs.size())}};
  r.summary = "strict and lazy constant tt are pointwise equal but Tm([], Id_{Π Bool Bool}(f, g)) is empty";
  r.trace.push_back("pointwise witness ⟦strict x⟧ on x : Bool ⊢ Id(strict x, lazy x):");
  for (const Play& p : witness.parts[0].plays()) {
    if (p.size() < 4) continue;
    for (const auto& line : FormatPlay(p, {"!Bool", "Id"})) r.trace.push_back("  " + line);
    r.trace.push_back("");
  }
  r.trace.push_back("Π-level fibre strict ∩ lazy = " + ShowGame(fibre));
  return r;
}

DemoReport Uip(const DemoConfig& config) {
  DemoReport r{"uip", true, "", {}, {}};
  Cwf cwf(config.bound, config.limits);
  std::vector<std::pair<std::string, Game>> games{{"Bool", Boolean()},
                                                  {"flat3", Flat({"a0", "a1", "a2"})}};
  for (const auto& [label, x] : games) {
    TyEntry a{ContextGame{}, {DependentGame::Constant(x)}};
    Term u = cwf.Uip(a);
    bool ok = cwf.WellTyped(u);
    r.passed = r.passed && ok;
    r.facts.push_back({"UIP winning on " + label, Bool(ok)});
    r.trace.push_back("UIP over " + label + ": " + std::to_string(u.parts[0].plays().size()) +
                      " plays, winning = " + Bool(ok));
  }
  r.summary = "x, y : A, p, q : Id(x, y) ⊢ UIP : Id_{Id(x, y)}(p, q) by derelicted copycat onto p";
  return r;
}

// The maximal play mentioning the most of `prefer`, longest first.
Play Representative(const Strategy& s, const std::vector<std::string>& prefer) {
  Play best;
  int best_score = -1;
  for (const Play& p : s.plays()) {
    int score = static_cast<int>(p.size()) * 10;
    for (const auto& w : prefer) {
      score += std::any_of(p.begin(), p.end(), [&](const Move& m) { return m.base == w; }) ? 100 : 0;
    }
    if (score > best_score) {
      best = p;
      best_score = score;
    }
  }
  return best;
}

DemoReport Calendar(const DemoConfig& config) {
  using namespace calendar;
  DemoReport r{"calendar", false, "", {}, {}};
  int k = std::max(config.bound, 2);
  int accepted = 0;
  const std::vector<std::vector<std::string>> prefer{{}, {"1984"}, {"1984", "1985"}, {"206"}};
  for (int col = 1; col <= 4; ++col) {
    Strategy s = Column(col, k);
    bool ok = s.winning();
    accepted += ok;
    r.facts.push_back({"column " + std::to_string(col) + " winning", Bool(ok)});
    r.trace.push_back("column " + std::to_string(col) + (ok ? " (winning)" : " (NOT winning)"));
    std::vector<std::string> cols = col == 4 ? std::vector<std::string>{"!Years", "!days", "days"}
                                             : std::vector<std::string>{"!Years", "days"};
    for (const auto& line : FormatPlay(Representative(s, prefer[col - 1]), cols)) r.trace.push_back("  " + line);
  }
  Play f{Move{{kRight}, "*"}, Move{{kRight}, "365"}};
  bool rejected = false;
  try {
    StrategyFromPlays(DaysFunctions(k), {f});
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::kIllegalResponse;
  }
  Strategy on_total = StrategyFromPlays(Arrow(Years(), DaysTotal(), k), {f}, Strictness::kLenient);
  Strategy y = Point(Years(), "1983");
  Strategy composed = Substitute(DaysTotal(), 0, std::span<const Strategy>(&y, 1), on_total, config.limits);
  Play star365{Move{{}, "*"}, Move{{}, "365"}};
  bool illegal = composed.Contains(star365) && !IsPlay(Days().At({y}), star365);
  r.passed = accepted == 4 && rejected && illegal;
  r.facts.push_back({"accepted", std::to_string(accepted)});
  r.facts.push_back({"f = {ε, *365} rejected", Bool(rejected)});
  r.facts.push_back({"1983;f ∉ days(1983)", Bool(illegal)});
  r.trace.push_back("f = {ε, *365}: " + std::string(rejected ? "rejected" : "accepted"));
  r.trace.push_back("1983;f = " + ShowStrategy(composed) + ", legal in days(1983): " + Bool(!illegal));
  r.summary = "four Fig. 1 strategies accepted, the constant 365 rejected";
  return r;
}

}  // namespace

const std::vector<std::string>& DemoNames() {
  static const std::vector<std::string> names{"i1", "i2", "i3", "funext", "uip", "calendar"};
  return names;
}

DemoReport RunDemo(const std::string& name, const DemoConfig& config, bool require) {
  static const std::map<std::string, std::function<DemoReport(const DemoConfig&)>> demos{
      {"i1", I1}, {"i2", I2}, {"i3", I3}, {"funext", FunExt}, {"uip", Uip}, {"calendar", Calendar}};
  auto it = demos.find(name);
  if (it == demos.end()) throw Error(ErrorCode::kDemoFailed, "unknown demo " + name);
  DemoReport r = it->second(config);
  if (require && !r.passed) {
    std::string msg = name + " failed";
    for (const auto& line : r.trace) msg += "\n" + line;
    throw Error(ErrorCode::kDemoFailed, msg);
  }
  return r;
}

std::vector<std::string> FormatPlay(const Play& s, const std::vector<std::string>& columns) {
  std::size_t n = columns.size() - 1;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Move& m = s[i];
    std::size_t comp = 0;
    while (comp < n && comp < m.path.size() && m.path[comp] == kRight) ++comp;
    std::size_t rest = comp < n ? comp + 1 : comp;
    std::string text = m.base;
    if (rest < m.path.size() && IsThread(m.path[rest])) {
      text = "(" + std::to_string(ThreadIndex(m.path[rest])) + "," + m.base + ")";
    }
    std::vector<std::string> row(columns.size());
    row[std::min(comp, n)] = text;
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    rows.push_back(std::move(row));
  }
  auto pad = [](const std::string& t, std::size_t w) { return t + std::string(w - std::min(w, t.size()), ' '); };
  std::vector<std::string> out;
  std::string head, rule;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    head += pad(columns[c], width[c]) + "  ";
    rule += std::string(width[c], '-') + "  ";
  }
  out.push_back(head);
  out.push_back(rule);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string line;
    for (std::size_t c = 0; c < rows[i].size(); ++c) line += pad(rows[i][c], width[c]) + "  ";
    out.push_back(line + (i % 2 == 0 ? "O" : "P"));
  }
  return out;
}

}  // namespace dttg
