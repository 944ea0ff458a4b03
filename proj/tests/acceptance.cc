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

// Acceptance checks. Prints one PASS/FAIL line per criterion; `--only N`
// runs a single criterion. Exit status is nonzero if any selected criterion
// fails.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dttg/cwf.h"
#include "dttg/demos.h"
#include "dttg/dtt.h"
#include "dttg/fixtures.h"
#include "dttg/interp.h"
#include "dttg/laws.h"
#include "dttg/serialize.h"

namespace dttg {
namespace {

using dtt::ParseExpr;

struct Verdict {
  bool pass = false;
  std::vector<std::string> notes;
};

std::string ReadFixture(const std::string& name) {
  std::ifstream in(std::string(DTTG_FIXTURES_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string B(bool b) { return b ? "yes" : "no"; }

std::set<std::string> Keys(const std::vector<Strategy>& ss) {
  std::set<std::string> out;
  for (const Strategy& s : ss) out.insert(s.key());
  return out;
}

// 1. Categorical laws.
Verdict Laws() {
  Verdict v{true, {}};
  v.notes.push_back("games in suite: " + std::to_string(LawGames().size()));
  if (LawGames().size() < 10) v.pass = false;
  for (const LawResult& r : CategoricalLaws()) {
    v.pass = v.pass && r.ok();
    v.notes.push_back(r.name + ": " + std::to_string(r.passed) + "/" + std::to_string(r.checked) +
                      ", bound exceeded " + std::to_string(r.bound_exceeded));
    for (const auto& f : r.failures) v.notes.push_back("  failed: " + f);
  }
  return v;
}

// 2. The four calendar strategies, the rejected constant 365 and 1983;f.
Verdict Figure() {
  using namespace calendar;
  Verdict v{true, {}};
  const int k = 2;
  auto m = [](std::vector<Tag> path, std::string base) { return Move{std::move(path), std::move(base)}; };
  const Tag t0 = Thread(0), t1 = Thread(1);
  const std::vector<std::vector<Play>> shown{
      {{m({kRight}, "*"), m({kRight}, "364")}},
      {{m({kRight}, "*"), m({kLeft, t0}, "*"), m({kLeft, t0}, "1984"), m({kRight}, "365")}},
      {{m({kRight}, "*"), m({kLeft, t0}, "*"), m({kLeft, t0}, "1984"), m({kLeft, t1}, "*"),
        m({kLeft, t1}, "1985"), m({kRight}, "365")}},
      {{m({kRight, kRight}, "*"), m({kRight, kLeft, t0}, "*"), m({kRight, kLeft, t0}, "0"),
        m({kRight, kRight}, "0")},
       {m({kRight, kRight}, "*"), m({kRight, kLeft, t0}, "*"), m({kRight, kLeft, t0}, "206"),
        m({kRight, kRight}, "206")},
       {m({kRight, kRight}, "*"), m({kRight, kLeft, t0}, "*"), m({kRight, kLeft, t0}, "365"),
        m({kRight, kRight}, "365")}},
  };
  for (int col = 1; col <= 4; ++col) {
    Game g = col == 4 ? DaysEndoFunctions(k) : DaysFunctions(k);
    Strategy s = Column(col, k);
    bool winning = IsWinning(g, s);
    bool contains = std::all_of(shown[col - 1].begin(), shown[col - 1].end(),
                                [&](const Play& p) { return s.Contains(p); });
    v.pass = v.pass && winning && contains;
    v.notes.push_back("column " + std::to_string(col) + ": winning " + B(winning) + ", shows the figure play " +
                      B(contains));
  }
  Play f{m({kRight}, "*"), m({kRight}, "365")};
  bool rejected = false;
  try {
    StrategyFromPlays(DaysFunctions(k), {f});
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::kIllegalResponse;
  }
  Strategy y1983 = Point(Years(), "1983");
  Strategy on_total = StrategyFromPlays(Arrow(Years(), DaysTotal(), k), {f}, Strictness::kLenient);
  Strategy composed = Substitute(DaysTotal(), 0, std::span<const Strategy>(&y1983, 1), on_total);
  Play star365{m({}, "*"), m({}, "365")};
  bool in_1983 = IsPlay(Days().At({y1983}), star365);
  bool in_1984 = IsPlay(Days().At({Point(Years(), "1984")}), star365);
  bool illegal = composed.Contains(star365) && !in_1983 && in_1984;
  v.pass = v.pass && rejected && illegal;
  v.notes.push_back("f = {ε, *365} rejected: " + B(rejected));
  v.notes.push_back("1983;f contains *365: " + B(composed.Contains(star365)) + ", legal in days(1983): " +
                    B(in_1983) + ", legal in days(1984): " + B(in_1984));
  return v;
}

// 3. CwF equations on the shipped fixtures and random contexts.
Verdict CwfEquations() {
  Verdict v{true, {}};
  LawConfig config;
  config.fixtures_dir = DTTG_FIXTURES_DIR;
  for (const LawResult& r : CwfLaws(config)) {
    bool fixtures = r.covered.count("calendar") && r.covered.count("RA");
    int random = 0;
    for (const auto& c : r.covered) random += c.rfind("random", 0) == 0;
    v.pass = v.pass && r.ok() && fixtures;
    v.notes.push_back(r.name + ": " + std::to_string(r.passed) + "/" + std::to_string(r.checked) +
                      ", calendar and RA covered " + B(fixtures) + ", random contexts covered " +
                      std::to_string(random) + ", bound exceeded " + std::to_string(r.bound_exceeded));
    for (const auto& f : r.failures) v.notes.push_back("  failed: " + f);
  }
  return v;
}

// 4. Intensionality verdicts.
Verdict Intensionality() {
  Verdict v{true, {}};
  dtt::Signature sig;
  Cwf cwf(2);
  Interpreter in(sig, cwf);
  const std::vector<std::string> xyz{"x", "y", "z"};
  dtt::Telescope tel;
  tel.push_back({"x", dtt::CheckType(sig, tel, ParseExpr("Bool"))});
  tel.push_back({"y", dtt::CheckType(sig, tel, ParseExpr("Bool"))});
  tel.push_back({"z", dtt::CheckType(sig, tel, ParseExpr("Id Bool x y", {"x", "y"}))});
  Term x = in.Interpret(tel, ParseExpr("x", xyz), ParseExpr("Bool"));
  Term y = in.Interpret(tel, ParseExpr("y", xyz), ParseExpr("Bool"));
  ContextGame ctx = in.Context(tel);
  std::vector<Strategy> at{EmptyStrategy(ctx[0].total()), Point(Boolean(), "tt"), EmptyStrategy(ctx[2].total())};
  Game bool_game = Boolean();

  // Equality reflection: no definitional equality, and the denotations differ.
  bool defeq = dtt::DefEq(sig, tel, ParseExpr("x", xyz), ParseExpr("y", xyz), ParseExpr("Bool"));
  bool reflection_fails = !defeq && !Cwf::Equal(x, y);
  v.notes.push_back("reflection fails: " + B(reflection_fails));

  // I1: at x = z = ⊥, y = tt the two projections are told apart.
  Strategy xa = cwf.Apply(x.parts[0], at, bool_game), ya = cwf.Apply(y.parts[0], at, bool_game);
  bool i1 = xa.plays().size() == 1 && ya.Contains({Move{{}, "*"}, Move{{}, "tt"}}) && !StrategiesEqual(xa, ya);
  v.notes.push_back("I1 x(⊥,tt,⊥) has " + std::to_string(xa.plays().size()) + " plays, y(⊥,tt,⊥) has " +
                    std::to_string(ya.plays().size()) + ": " + B(i1));

  // I2: a table over Bool with ⊥, ff ↦ the empty subgame and tt ↦ Bool.
  Game none = ExplicitSubgame(bool_game, {});
  DependentGame table = DependentGame::FromTable(
      bool_game, {bool_game},
      {{{EmptyStrategy(bool_game)}, none}, {{Point(bool_game, "ff")}, none}, {{Point(bool_game, "tt")}, bool_game}});
  ContextGame one({DependentGame::Constant(bool_game)});
  DependentGame bx = cwf.Reindex(table, ctx, one, x.parts);
  DependentGame by = cwf.Reindex(table, ctx, one, y.parts);
  bool i2 = !SubgameLeq(by.At(at), bx.At(at)) && !dtt::AlphaEqual(ParseExpr("x", xyz), ParseExpr("y", xyz));
  v.notes.push_back("I2 B x and B y differ at (⊥,tt,⊥): " + B(i2));

  // I3: closed Id inhabited only on the diagonal, exhaustively on small types.
  bool i3 = true;
  int pairs = 0, inhabited = 0;
  Cwf one_bound(1);
  for (const Game& a : {Flat({"a"}), Boolean(), Flat({"x", "y", "z"}), Arrow(Boolean(), Boolean(), 1)}) {
    TyEntry ty{ContextGame(), {DependentGame::Constant(a)}};
    Game hom = one_bound.HomGame(ContextGame(), ty.entries[0]);
    auto terms = EnumerateWinning(hom);
    for (const Strategy& s : terms) {
      for (const Strategy& t : terms) {
        Term ts{ContextGame(), ty, {s}}, tt{ContextGame(), ty, {t}};
        TyEntry id = one_bound.Id(ty, ts, tt);
        bool has = !EnumerateWinning(one_bound.HomGame(ContextGame(), id.entries[0])).empty();
        ++pairs;
        inhabited += has;
        if (has != StrategiesEqual(s, t)) i3 = false;
      }
    }
  }
  v.notes.push_back("I3 " + std::to_string(inhabited) + " of " + std::to_string(pairs) +
                    " closed Id types inhabited, all on the diagonal: " + B(i3));

  // FunExt: pointwise equal, yet the Π-level Id game has no winning strategy.
  const std::string f = "(λ(a : Bool). tt)", g = "(λ(a : Bool). if a then tt else tt)";
  TyEntry pointwise = in.Type({}, ParseExpr("Π(x : Bool). Id Bool (" + f + " x) (" + g + " x)"));
  TyEntry global = in.Type({}, ParseExpr("Id (Bool → Bool) " + f + " " + g));
  auto witnesses = EnumerateWinning(cwf.HomGame(ContextGame(), pointwise.entries[0]));
  auto proofs = EnumerateWinning(cwf.HomGame(ContextGame(), global.entries[0]));
  bool funext_refuted = !witnesses.empty() && proofs.empty();
  v.notes.push_back("FunExt pointwise witnesses " + std::to_string(witnesses.size()) + ", Π-level proofs " +
                    std::to_string(proofs.size()) + ": " + B(funext_refuted));

  // UIP: the witness is winning on its game.
  bool uip = true;
  for (const Game& a : {Boolean(), Flat({"x", "y", "z"})}) {
    TyEntry ty{ContextGame(), {DependentGame::Constant(a)}};
    Term u = cwf.Uip(ty);
    uip = uip && cwf.WellTyped(u) && IsWinning(u.parts[0].game(), u.parts[0]);
  }
  v.notes.push_back("UIP witness winning: " + B(uip));

  bool demos = true;
  for (const std::string name : {"i1", "i2", "i3", "funext", "uip"}) {
    bool ok = RunDemo(name, {2, {}}).passed;
    demos = demos && ok;
    v.notes.push_back("demo " + name + ": " + (ok ? "PASS" : "FAIL"));
  }
  v.pass = reflection_fails && i1 && i2 && i3 && funext_refuted && uip && demos;
  return v;
}

// Closed Id-free terms as source text, with redexes of every kind.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::string Term(const std::string& type, int depth) { return Gen(type, depth, {}); }

 private:
  using Scope = std::vector<std::pair<std::string, std::string>>;

  int Pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  std::string Fresh() { return "v" + std::to_string(fresh_++); }

  std::string Var(const std::string& type, const Scope& scope) {
    std::vector<std::string> hits;
    for (const auto& [n, t] : scope) {
      if (t == type) hits.push_back(n);
    }
    return hits.empty() ? "" : hits[Pick(static_cast<int>(hits.size()))];
  }

  std::string Gen(const std::string& type, int depth, const Scope& scope) {
    std::string var = Var(type, scope);
    if (!var.empty() && Pick(3) == 0) return var;
    if (depth > 0) {
      switch (Pick(4)) {
        case 0: {  // β-redex
          std::string a = Pick(2) ? "Bool" : "Bool × Bool";
          std::string x = Fresh();
          Scope inner = scope;
          inner.push_back({x, a});
          return "(λ(" + x + " : " + a + "). " + Gen(type, depth - 1, inner) + ") (" + Gen(a, depth - 1, scope) + ")";
        }
        case 1:  // projection of a pair
          if (type == "Bool") {
            bool first = Pick(2);
            return std::string(first ? "fst" : "snd") + " (" + Gen("Bool × Bool", depth - 1, scope) + ")";
          }
          break;
        case 2:  // conditional
          return "(if " + Gen("Bool", depth - 1, scope) + " then " + Gen(type, depth - 1, scope) + " else " +
                 Gen(type, depth - 1, scope) + " : " + type + ")";
        default:
          break;
      }
    }
    if (type == "Bool") return Pick(2) ? "tt" : "ff";
    if (type == "Unit") return "()";
    if (type == "Bool × Bool") return "(" + Gen("Bool", depth - 1, scope) + ", " + Gen("Bool", depth - 1, scope) + ")";
    std::string x = Fresh();
    Scope inner = scope;
    inner.push_back({x, "Bool"});
    std::string result = type == "Bool → Bool" ? "Bool" : "Bool → Bool";
    return "(λ(" + x + " : Bool). " + Gen(result, depth - 1, inner) + ")";
  }

  std::mt19937_64 rng_;
  int fresh_ = 0;
};

// 5. Definitional equality implies equal denotations.
Verdict Soundness() {
  Verdict v{true, {}};
  dtt::Signature sig;
  Interpreter k2(sig, Cwf(2)), k3(sig, Cwf(3));
  // Thread bound 2, else 3; nullopt when both are exceeded.
  auto same = [&](const dtt::ExprPtr& t, const dtt::ExprPtr& u, const dtt::ExprPtr& type) -> std::optional<bool> {
    for (Interpreter* in : {&k2, &k3}) {
      try {
        return SemanticEqual(*in, t, u, type);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBoundExceeded) throw;
      }
    }
    return std::nullopt;
  };
  Generator gen(20261015);
  const std::vector<std::string> types{"Bool", "Unit", "Bool × Bool", "Bool → Bool", "Bool → Bool → Bool"};
  int terms = 0, compared = 0, pairs = 0, equal = 0, beyond = 0, ill_typed = 0;
  std::map<std::string, std::vector<dtt::ExprPtr>> buckets;
  for (int i = 0; compared < 240; ++i) {
    const std::string& ty = types[i % types.size()];
    dtt::ExprPtr type = ParseExpr(ty);
    dtt::ExprPtr t = ParseExpr(gen.Term(ty, 3));
    dtt::ExprPtr checked;
    try {
      checked = dtt::Check(sig, {}, t, type);
    } catch (const Error& e) {
      ++ill_typed;
      v.notes.push_back("generator produced an ill-typed term: " + std::string(e.what()));
      continue;
    }
    ++terms;
    dtt::ExprPtr nf = ParseExpr(dtt::Print(dtt::Normalize(sig, {}, checked, type)));
    std::vector<dtt::ExprPtr> partners{nf};
    for (const auto& u : buckets[ty]) {
      if (dtt::DefEq(sig, {}, checked, dtt::Check(sig, {}, u, type), type)) partners.push_back(u);
    }
    bool all = true;
    for (const auto& u : partners) {
      auto r = same(t, u, type);
      if (!r) {
        ++beyond;
        all = false;
        continue;
      }
      ++pairs;
      if (*r) {
        ++equal;
      } else if (v.notes.size() < 12) {
        v.notes.push_back("differs: " + dtt::Print(t) + "  vs  " + dtt::Print(u));
      }
    }
    compared += all;
    buckets[ty].push_back(t);
  }
  v.pass = compared >= 200 && ill_typed == 0 && pairs == equal;
  v.notes.insert(v.notes.begin(), std::to_string(terms) + " terms (" + std::to_string(compared) +
                                      " with every pair computable at K ≤ 3), " + std::to_string(pairs) +
                                      " definitionally equal pairs, " + std::to_string(equal) +
                                      " with equal denotations, " + std::to_string(beyond) +
                                      " pairs beyond the thread bound");
  return v;
}

// Decision trees over the variables, each tested at most `uses` times on a path.
void Trees(const std::vector<std::string>& vars, std::map<std::string, int> uses, std::vector<std::string>& out) {
  out.push_back("tt");
  out.push_back("ff");
  for (const auto& x : vars) {
    if (uses[x] == 0) continue;
    auto less = uses;
    --less[x];
    std::vector<std::string> sub;
    Trees(vars, less, sub);
    for (const auto& a : sub) {
      for (const auto& b : sub) out.push_back("(if " + x + " then " + a + " else " + b + " : Bool)");
    }
  }
}

struct Probe {
  std::size_t forms = 0, distinct = 0, strategies = 0;
  bool exact = false;
  std::string error;
};

Probe FullCompleteness(const std::string& type, const std::vector<std::string>& vars,
                       const std::vector<std::string>& bodies, int k) {
  Probe p;
  dtt::Signature sig;
  Interpreter in(sig, Cwf(k));
  std::set<std::string> denoted;
  for (const auto& body : bodies) {
    std::string text = body;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) text = "(λ(" + *it + " : Bool). " + text + ")";
    denoted.insert(in.Interpret({}, ParseExpr(text), ParseExpr(type)).parts[0].key());
  }
  p.forms = bodies.size();
  p.distinct = denoted.size();
  try {
    TyEntry ty = in.Type({}, ParseExpr(type));
    auto all = EnumerateWinning(in.cwf().HomGame(ContextGame(), ty.entries[0]));
    p.strategies = all.size();
    p.exact = Keys(all) == denoted;
  } catch (const Error& e) {
    p.error = e.what();
  }
  return p;
}

std::string Describe(const Probe& p) {
  return std::to_string(p.forms) + " forms, " + std::to_string(p.distinct) + " distinct denotations, " +
         (p.error.empty() ? std::to_string(p.strategies) + " winning strategies, exact set equality " + B(p.exact)
                          : "enumeration: " + p.error);
}

// 6. Faithfulness and full completeness at Bool → Bool → Bool.
Verdict Faithfulness() {
  Verdict v{false, {}};
  // One normal form per boolean function of (x, y): test x, then y where needed.
  std::vector<std::string> sixteen;
  auto leaf = [](bool a, bool b) -> std::string {
    if (a == b) return a ? "tt" : "ff";
    return a ? "y" : "(if y then ff else tt : Bool)";
  };
  for (int table = 0; table < 16; ++table) {
    bool a = table & 1, b = table & 2, c = table & 4, d = table & 8;
    std::string l = leaf(a, b), r = leaf(c, d);
    if (l == r) {
      sixteen.push_back(l);
    } else if (l == "tt" && r == "ff") {
      sixteen.push_back("x");
    } else {
      sixteen.push_back("(if x then " + l + " else " + r + " : Bool)");
    }
  }
  Probe stated = FullCompleteness("Bool → Bool → Bool", {"x", "y"}, sixteen, 2);
  v.pass = stated.distinct == 16 && stated.error.empty() && stated.exact;
  v.notes.push_back("K=2, the 16 normal forms: " + Describe(stated));

  std::vector<std::string> k1, k2;
  Trees({"x", "y"}, {{"x", 1}, {"y", 1}}, k1);
  Trees({"x"}, {{"x", 2}}, k2);
  Probe one = FullCompleteness("Bool → Bool → Bool", {"x", "y"}, k1, 1);
  Probe two = FullCompleteness("Bool → Bool", {"x"}, k2, 2);
  v.notes.push_back("K=1, all decision trees at Bool → Bool → Bool: " + Describe(one));
  v.notes.push_back("K=2, all decision trees at Bool → Bool: " + Describe(two));
  return v;
}

// 7. The calendar family: constructors, case-β, exfalso fibres.
Verdict Family() {
  Verdict v{true, {}};
  dtt::Signature sig;
  sig.Load(ReadFixture("calendar.dtt"));
  Interpreter in(sig, Cwf(2));
  const Cwf& cwf = in.cwf();
  const FiniteFamily& fam = in.Family("Days");

  int ctors = 0, winning = 0;
  std::map<std::string, Term> ctor_terms;
  for (const auto& point : fam.points) {
    for (const auto& c : point.constructors) {
      Term t = cwf.Constructor(ContextGame(), fam, c);
      ++ctors;
      winning += cwf.WellTyped(t) && IsWinning(t.parts[0].game(), t.parts[0]);
      ctor_terms.emplace(c, t);
    }
  }
  v.pass = v.pass && ctors == winning && ctors == 6 * 365 + 2;
  v.notes.push_back(std::to_string(winning) + " of " + std::to_string(ctors) + " constructors winning in their fibres");

  // Per point, a case over that fibre; branch c answers the parity of its day.
  auto parity = [](const std::string& c) { return (std::stoi(c.substr(c.find('_') + 1)) % 2 == 0) ? "tt" : "ff"; };
  Term tt = in.Interpret({}, ParseExpr("tt"), ParseExpr("Bool"));
  Term ff = in.Interpret({}, ParseExpr("ff"), ParseExpr("Bool"));
  int beta = 0;
  for (const auto& point : fam.points) {
    std::string branches;
    for (const auto& c : point.constructors) branches += (branches.empty() ? "" : "; ") + c + " => " + parity(c);
    dtt::Telescope tel;
    tel.push_back({"d", dtt::CheckType(sig, tel, ParseExpr("Days " + point.name))});
    Term cs = in.Interpret(tel, ParseExpr("case d of { " + branches + " }", {"d"}), ParseExpr("Bool"));
    for (const auto& c : point.constructors) {
      Term day = in.Interpret({}, ParseExpr(c), ParseExpr("Days " + point.name));
      Term r = cwf.TmSubst(cs, Morphism{ContextGame(), cs.ctx, {day.parts[0]}});
      beta += Cwf::Equal(r, std::string(parity(c)) == "tt" ? tt : ff);
    }
  }
  v.pass = v.pass && beta == ctors;
  v.notes.push_back("case-β holds for " + std::to_string(beta) + " of " + std::to_string(ctors) + " branches");

  // Id between distinct constructors of one fibre: no winning strategy.
  int fibres = 0, empty = 0;
  for (std::size_t i = 0; i < fam.points.size(); ++i) {
    const auto& cs_i = fam.points[i].constructors;
    TyEntry at = cwf.FamilyAt(ContextGame(), fam, static_cast<int>(i));
    for (std::size_t j = 0; j < cs_i.size(); ++j) {
      for (std::size_t k : {std::size_t{0}, (j + 1) % cs_i.size(), (j * 7 + 3) % cs_i.size()}) {
        if (k == j) continue;
        Term a = ctor_terms.at(cs_i[j]), b = ctor_terms.at(cs_i[k]);
        a.type = at;
        b.type = at;
        TyEntry id = cwf.Id(at, a, b);
        ++fibres;
        empty += EnumerateWinning(cwf.HomGame(ContextGame(), id.entries[0])).empty();
      }
    }
  }
  TyEntry same = cwf.Id(cwf.FamilyAt(ContextGame(), fam, 1), ctor_terms.at("d1984_59"), ctor_terms.at("d1984_59"));
  bool refl = EnumerateWinning(cwf.HomGame(ContextGame(), same.entries[0])).size() == 1;
  v.pass = v.pass && fibres == empty && refl;
  v.notes.push_back(std::to_string(empty) + " of " + std::to_string(fibres) +
                    " Id fibres between distinct constructors have no winning strategy; Id(b, b) has one: " +
                    B(refl));
  return v;
}

// 8. consistent_extensions against filtering every winning strategy.
Verdict Quantifier() {
  Verdict v{true, {}};
  std::mt19937_64 rng(8);
  Game b = Boolean(), f1 = Flat({"a"}), f3 = Flat({"x", "y", "z"});
  const std::vector<Game> fibres{
      b, f3, FlatSubgame(f3, {"x", "z"}), With(b, f1), Arrow(b, b, 1), Arrow(f1, b, 2), Lollipop(b, f3),
      Tensor(f1, b), Arrow(b, f1, 2),
  };
  int agree = 0, nonempty = 0, empty_obs = 0;
  for (int i = 0; i < 50; ++i) {
    const Game& g = fibres[i % fibres.size()];
    std::vector<Play> plays;
    for (const Play& p : EnumeratePlays(Total(g))) {
      if (!p.empty() && p.size() % 2 == 0) plays.push_back(p);
    }
    Observation obs;
    int n = std::uniform_int_distribution<int>(0, 5)(rng) % 3;
    for (int j = 0; j < n; ++j) obs.Add(plays[std::uniform_int_distribution<std::size_t>(0, plays.size() - 1)(rng)]);
    empty_obs += obs.empty();
    std::vector<Strategy> oracle;
    for (const Strategy& s : EnumerateWinning(g)) {
      if (std::all_of(obs.plays.begin(), obs.plays.end(), [&](const Play& p) { return s.Contains(p); }))
        oracle.push_back(s);
    }
    auto got = ConsistentExtensions(g, obs);
    bool same = Keys(got) == Keys(oracle) && got.size() == oracle.size();
    agree += same;
    nonempty += !oracle.empty();
    if (!same) v.notes.push_back("disagree on " + PrintGame(g) + " with " + std::to_string(obs.plays.size()) + " plays");
  }
  v.pass = agree == 50;
  v.notes.insert(v.notes.begin(), std::to_string(agree) + " of 50 pairs agree (" + std::to_string(nonempty) +
                                      " with extensions, " + std::to_string(empty_obs) + " empty observations)");
  return v;
}

}  // namespace
}  // namespace dttg

int main(int argc, char** argv) {
  using namespace dttg;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"categorical laws", Laws},
      {"calendar strategies", Figure},
      {"CwF equations", CwfEquations},
      {"intensionality verdicts", Intensionality},
      {"soundness on generated terms", Soundness},
      {"faithfulness and full completeness", Faithfulness},
      {"finite family semantics", Family},
      {"quantifier engine oracle", Quantifier},
  };
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--only") only = std::atoi(argv[2]);
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.notes.push_back(std::string("error: ") + e.what());
    }
    all = all && v.pass;
    std::cout << "criterion " << i + 1 << " " << (v.pass ? "PASS" : "FAIL") << ": " << criteria[i].first << "\n";
    for (const auto& n : v.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
