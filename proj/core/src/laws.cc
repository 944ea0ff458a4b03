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

#include "dttg/laws.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "dttg/cwf.h"
#include "dttg/fixtures.h"
#include "dttg/serialize.h"
#include "dttg/strategy.h"

namespace dttg {
namespace {

// Runs one instance; BoundExceeded is counted apart from passes and failures.
void Check(LawResult& r, const std::string& label, const std::function<bool()>& body) {
  try {
    bool ok = body();
    ++r.checked;
    if (ok) {
      ++r.passed;
      r.covered.insert(label);
    } else {
      r.failures.push_back(label);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBoundExceeded) {
      ++r.bound_exceeded;
      return;
    }
    ++r.checked;
    r.failures.push_back(label + ": " + e.what());
  }
}

std::optional<Strategy> Sample(const Game& g, std::mt19937_64& rng, double answer_bias = 0.0) {
  return SampleWinning(g, rng, answer_bias);
}

}  // namespace

std::vector<std::pair<std::string, Game>> LawGames() {
  Game f1 = Flat({"a"});
  Game f2 = Boolean();
  Game f3 = Flat({"x", "y", "z"});
  return {
      {"I", Unit()},
      {"1", f1},
      {"2", f2},
      {"3", f3},
      {"1⊗2", Tensor(f1, f2)},
      {"2&1", With(f2, f1)},
      {"1⊸2", Lollipop(f1, f2)},
      {"!2 1", Bang(f1, 2)},
      {"3&I", With(f3, Unit())},
      {"!2 2", Bang(f2, 2)},
      {"1⊗I", Tensor(f1, Unit())},
  };
}

std::vector<LawResult> CategoricalLaws(const LawConfig& config) {
  auto games = LawGames();
  const std::size_t n = games.size();
  std::mt19937_64 rng(config.seed);
  const Limits& lim = config.limits;
  LawResult unit{"compose identity"}, assoc{"compose associativity"};
  LawResult kunit{"cokleisli identity"}, kassoc{"cokleisli associativity"};
  LawResult counit_l{"comonad δ;der = id"}, counit_r{"comonad δ;!der = id"};
  LawResult coassoc{"comonad coassociativity"}, seely{"Seely inverse"};

  for (std::size_t i = 0; i < n; ++i) {
    const auto& [an, a] = games[i];
    const auto& [bn, b] = games[(i + 1) % n];
    const auto& [cn, c] = games[(i + 2) % n];
    const auto& [dn, d] = games[(i + 3) % n];
    const std::string tag = an + " " + bn + " " + cn + " " + dn;

    for (int s = 0; s < config.samples; ++s) {
      auto sigma = Sample(Lollipop(a, b), rng);
      auto tau = Sample(Lollipop(b, c), rng);
      auto rho = Sample(Lollipop(c, d), rng);
      if (sigma) {
        Check(unit, tag, [&] {
          return StrategiesEqual(Compose(Copycat(a), *sigma, lim), *sigma) &&
                 StrategiesEqual(Compose(*sigma, Copycat(b), lim), *sigma);
        });
      }
      if (sigma && tau && rho) {
        Check(assoc, tag, [&] {
          return StrategiesEqual(Compose(Compose(*sigma, *tau, lim), *rho, lim),
                                 Compose(*sigma, Compose(*tau, *rho, lim), lim));
        });
      }
      auto f = Sample(Arrow(a, b, 2), rng);
      auto g = Sample(Arrow(b, c, 2), rng);
      auto h = Sample(Arrow(c, d, 2), rng);
      if (f) {
        Check(kunit, tag, [&] {
          return StrategiesEqual(CokleisliCompose(Dereliction(a, 2), *f, lim), *f) &&
                 StrategiesEqual(CokleisliCompose(*f, Dereliction(b, 1), lim), *f);
        });
      }
      if (f && g && h) {
        Check(kassoc, tag, [&] {
          return StrategiesEqual(CokleisliCompose(CokleisliCompose(*f, *g, lim), *h, lim),
                                 CokleisliCompose(*f, CokleisliCompose(*g, *h, lim), lim));
        });
      }
    }

    // Bang bounds (k, k') of δ on !(k·k') A; flat games take the larger budget.
    const bool small = Root(a).kind == GameKind::kUnit || Root(a).kind == GameKind::kFlat;
    std::vector<std::pair<int, int>> splits{{2, 1}, {1, 2}};
    if (small) splits.push_back({2, 2});
    for (auto [k, inner] : splits) {
      const std::string at = an + " δ" + std::to_string(k) + "," + std::to_string(inner);
      Check(counit_l, at, [&] {
        return StrategiesEqual(Compose(Digging(a, k, inner), Dereliction(Bang(a, inner), k), lim),
                               Copycat(Bang(a, inner)));
      });
      Check(counit_r, at, [&] {
        return StrategiesEqual(Compose(Digging(a, k, inner), BangFunctor(Dereliction(a, inner), k), lim),
                               Copycat(Bang(a, k)));
      });
    }
    std::vector<std::array<int, 3>> triples{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    if (small) triples.insert(triples.end(), {{2, 2, 1}, {2, 1, 2}, {1, 2, 2}});
    for (auto [k, k1, k2] : triples) {
      const std::string at = an + " " + std::to_string(k) + "," + std::to_string(k1) + "," + std::to_string(k2);
      Check(coassoc, at, [&] {
        Strategy lhs = Compose(Digging(a, k, k1 * k2), BangFunctor(Digging(a, k1, k2), k), lim);
        Strategy rhs = Compose(Digging(a, k * k1, k2), Digging(Bang(a, k2), k, k1), lim);
        return StrategiesEqual(lhs, rhs);
      });
    }
    // !(A&B) ≅ !A ⊗ !B, with B the one-answer game.
    const Game& f1 = games[1].second;
    Check(seely, an, [&] {
      return StrategiesEqual(Compose(SeelyForward(a, f1, 1), SeelyBackward(a, f1, 1), lim),
                             Copycat(Bang(With(a, f1), 1))) &&
             StrategiesEqual(Compose(SeelyBackward(a, f1, 2), SeelyForward(a, f1, 1), lim),
                             Copycat(Tensor(Bang(a, 1), Bang(f1, 1))));
    });
  }
  return {unit, assoc, kunit, kassoc, counit_l, counit_r, coassoc, seely};
}

namespace {

struct Fixture {
  std::string name;
  ContextGame ctx;
  TyEntry type;
  // Large flat games: sample strategies that mostly answer at once.
  double answer_bias = 0.0;
};

std::vector<std::string> Answers(int n, const std::string& prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// A monotone table over a flat base: ⊥ gets a subset, each point a superset.
DependentGame RandomTable(const Game& base, const std::vector<std::string>& base_answers,
                          std::mt19937_64& rng) {
  int width = std::uniform_int_distribution<int>(1, 3)(rng);
  auto answers = Answers(width, "t");
  Game total = Flat(answers);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::string> bottom;
  for (const auto& a : answers) {
    if (coin(rng) && coin(rng)) bottom.push_back(a);
  }
  std::vector<DependentGame::Entry> table{{{EmptyStrategy(base)}, FlatSubgame(total, bottom)}};
  for (const auto& x : base_answers) {
    std::vector<std::string> fibre = bottom;
    for (const auto& a : answers) {
      if (coin(rng) && std::find(fibre.begin(), fibre.end(), a) == fibre.end()) fibre.push_back(a);
    }
    if (fibre.empty()) fibre.push_back(answers[0]);
    table.push_back({{Point(base, x)}, FlatSubgame(total, fibre)});
  }
  return DependentGame::FromTable(total, {base}, std::move(table));
}

Fixture RandomFixture(int index, std::mt19937_64& rng) {
  int width = std::uniform_int_distribution<int>(1, 3)(rng);
  auto xs = Answers(width, "x");
  Game x = Flat(xs);
  std::vector<DependentGame> entries{DependentGame::Constant(x)};
  Game last = x;
  std::vector<std::string> last_answers = xs;
  if (std::bernoulli_distribution(0.5)(rng)) {
    DependentGame y = RandomTable(x, xs, rng);
    entries.push_back(y);
    last = y.total();
    last_answers = last->answers;
  }
  ContextGame ctx(entries);
  DependentGame over_last = RandomTable(last, last_answers, rng);
  std::size_t pos = ctx.size() - 1;
  DependentGame a = DependentGame::FromFunction(
      over_last.total(), ctx.totals(),
      [over_last, pos](std::span<const Strategy> args) { return over_last.At({args[pos]}); });
  return {"random " + std::to_string(index), ctx, TyEntry{ctx, {a}}};
}

}  // namespace

namespace {

std::string ReadText(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<Morphism> SampleMorphism(const Cwf& cwf, const ContextGame& g, std::mt19937_64& rng,
                                       double bias) {
  Morphism f{g, g, {}};
  for (std::size_t j = 0; j < g.size(); ++j) {
    auto s = Sample(cwf.HomGame(g, cwf.Reindex(g[j], g, g, f.parts)), rng, bias);
    if (!s) return std::nullopt;
    f.parts.push_back(*s);
  }
  return f;
}

std::optional<Term> SampleTerm(const Cwf& cwf, const TyEntry& a, std::mt19937_64& rng, double bias) {
  Term t{a.over, a, {}};
  for (std::size_t j = 0; j < a.entries.size(); ++j) {
    auto s = Sample(cwf.HomGame(a.over, cwf.TermFibre(a, t.parts, j)), rng, bias);
    if (!s) return std::nullopt;
    t.parts.push_back(*s);
  }
  return t;
}

std::optional<Term> TrySampleTerm(const Cwf& cwf, const TyEntry& a, std::mt19937_64& rng, double bias) {
  try {
    return SampleTerm(cwf, a, rng, bias);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBoundExceeded) throw;
  }
  return std::nullopt;
}

// A morphism f together with a term of A{f}; A may be empty over parts of Γ.
std::optional<std::pair<Morphism, Term>> SampleAnchored(const Cwf& cwf, const TyEntry& a,
                                                        std::mt19937_64& rng, double bias) {
  for (int attempt = 0; attempt < 40; ++attempt) {
    auto f = SampleMorphism(cwf, a.over, rng, bias);
    if (!f) continue;
    if (auto t = TrySampleTerm(cwf, cwf.TySubst(a, *f), rng, bias)) return std::make_pair(*f, *t);
  }
  return std::nullopt;
}

}  // namespace

std::vector<LawResult> CwfLaws(const LawConfig& config) {
  Cwf cwf(2, config.limits);
  std::mt19937_64 rng(config.seed);
  std::vector<Fixture> fixtures;
  {
    DependentGame days = calendar::Days(), lyrics = calendar::Lyrics();
    if (!config.fixtures_dir.empty()) {
      days = DependentGameFromJson(ReadText(config.fixtures_dir + "/days.json"));
      lyrics = DependentGameFromJson(ReadText(config.fixtures_dir + "/ra.json"));
    }
    ContextGame years({DependentGame::Constant(days.base()[0])});
    fixtures.push_back({"calendar", years, TyEntry{years, {days}}});
    ContextGame year_day = years.Extend(days);
    fixtures.push_back({"RA", year_day, TyEntry{year_day, {lyrics}}, 1.0});
  }
  for (int i = 0; i < config.random_contexts; ++i) fixtures.push_back(RandomFixture(i, rng));

  LawResult ty_id{"Ty-Id"}, ty_comp{"Ty-Comp"}, tm_id{"Tm-Id"}, tm_comp{"Tm-Comp"};
  LawResult cons_l{"Cons-L"}, cons_r{"Cons-R"}, cons_id{"Cons-Id"}, cons_nat{"Cons-Nat"};
  const std::size_t width = 64;

  for (const Fixture& fx : fixtures) {
    const TyEntry& a = fx.type;
    Morphism id = cwf.Identity(fx.ctx);
    Check(ty_id, fx.name, [&] { return cwf.TypesEqual(cwf.TySubst(a, id), a, width); });
    Check(cons_id, fx.name, [&] {
      return Cwf::Equal(cwf.Extend(cwf.P(a), a, cwf.V(a)), cwf.Identity(a.Extended()));
    });
    for (int s = 0; s < config.samples; ++s) {
      const double bias = fx.answer_bias;
      auto ft = SampleAnchored(cwf, a, rng, bias);
      auto g = s % 2 == 1 ? std::optional<Morphism>(id) : SampleMorphism(cwf, fx.ctx, rng, bias);
      if (!ft || !g) continue;
      const Morphism* f = &ft->first;
      const Term* t = &ft->second;
      auto u = TrySampleTerm(cwf, a, rng, bias);
      if (!u) {
        if (auto hu = SampleAnchored(cwf, a, rng, bias)) u = hu->second;
      }
      Check(ty_comp, fx.name, [&] {
        return cwf.TypesEqual(cwf.TySubst(a, cwf.Compose(*f, *g)),
                              cwf.TySubst(cwf.TySubst(a, *g), *f), width);
      });
      if (u) {
        Check(tm_id, fx.name, [&] { return Cwf::Equal(cwf.TmSubst(*u, id), *u); });
        Check(tm_comp, fx.name, [&] {
          return Cwf::Equal(cwf.TmSubst(*u, cwf.Compose(*f, *g)), cwf.TmSubst(cwf.TmSubst(*u, *g), *f));
        });
      }
      Check(cons_l, fx.name, [&] { return Cwf::Equal(cwf.Compose(cwf.Extend(*f, a, *t), cwf.P(a)), *f); });
      Check(cons_r, fx.name, [&] { return Cwf::Equal(cwf.TmSubst(cwf.V(a), cwf.Extend(*f, a, *t)), *t); });
      Check(cons_nat, fx.name, [&] {
        return Cwf::Equal(cwf.Compose(*g, cwf.Extend(*f, a, *t)),
                          cwf.Extend(cwf.Compose(*g, *f), a, cwf.TmSubst(*t, *g)));
      });
    }
  }
  return {ty_id, ty_comp, tm_id, tm_comp, cons_l, cons_r, cons_id, cons_nat};
}

}  // namespace dttg
