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

#include "dttg/cwf.h"

#include <mutex>
#include <set>
#include <unordered_map>

#include "dttg/fixtures.h"

namespace dttg {

namespace {

std::vector<Tag> Rights(std::size_t n) { return std::vector<Tag>(n, kRight); }

std::vector<Tag> ArgPrefix(std::size_t i) {
  auto p = Rights(i);
  p.push_back(kLeft);
  return p;
}

// Component of a move in a curried game with n arguments: the argument
// index, or n for the result.
std::size_t Component(const Move& m, std::size_t n) {
  std::size_t r = 0;
  while (r < n && r < m.path.size() && m.path[r] == kRight) ++r;
  return r;
}

Move Reroot(const Move& m, std::size_t drop, std::vector<Tag> prefix) {
  prefix.insert(prefix.end(), m.path.begin() + drop, m.path.end());
  return {std::move(prefix), m.base};
}

// Derelicted copycat between argument `i` (thread 0) and the result of a
// curried game with n arguments.
Strategy DerFrom(const Game& g, std::size_t n, std::size_t i) {
  return StrategyFromFunction(g, [n, i](const Move& m) -> std::optional<Move> {
    if (Component(m, n) == n) {
      auto p = ArgPrefix(i);
      p.push_back(Thread(0));
      return Reroot(m, n, p);
    }
    if (Component(m, n) != i || m.path[i + 1] != Thread(0)) return std::nullopt;
    return Reroot(m, i + 2, Rights(n));
  });
}

// Renames the components of plays: `to[c]` is the new component index of
// old component c (old result = old_n, new result = new_n).
Move Rename(const Move& m, std::size_t old_n, std::size_t new_n, const std::vector<std::size_t>& to) {
  std::size_t c = Component(m, old_n);
  if (c == old_n) return Reroot(m, old_n, Rights(new_n));
  return Reroot(m, c + 1, ArgPrefix(to[c]));
}

std::string JoinKeys(const Strategy& f, std::span<const Strategy> args) {
  std::string key = f.key() + "@";
  for (const auto& a : args) key += a.key() + "$";
  return key;
}

bool GamesEqual(const Game& a, const Game& b) {
  return SubgameLeq(a, b) && SubgameLeq(b, a);
}

// Even plays of `s` also in `t`, with their odd extensions in `total`.
Game Intersection(const Strategy& s, const Strategy& t, const Game& total) {
  std::vector<Play> plays;
  for (const Play& p : s.plays()) {
    if (!t.play_keys().count(PlayKey(p))) continue;
    plays.push_back(p);
    for (const Move& a : LegalOpponentMoves(total, p)) {
      Play pa = p;
      pa.push_back(a);
      plays.push_back(std::move(pa));
    }
  }
  return ExplicitSubgame(total, plays);
}

}  // namespace

ContextGame TyEntry::Extended() const {
  std::vector<DependentGame> all = over.entries();
  all.insert(all.end(), entries.begin(), entries.end());
  return ContextGame(std::move(all));
}

std::pair<int, int> FiniteFamily::Find(const std::string& constructor) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& cs = points[i].constructors;
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j] == constructor) return {static_cast<int>(i), static_cast<int>(j)};
    }
  }
  return {-1, -1};
}

FiniteFamily MakeFamily(Game base, std::vector<FiniteFamily::Point> points, const std::string& name) {
  std::set<std::string> values, names;
  std::vector<std::string> all;
  for (const auto& p : points) {
    if (!values.insert(p.value.key()).second) {
      throw Error(ErrorCode::kDuplicatePoint, "duplicate point " + p.name);
    }
    for (const auto& c : p.constructors) {
      if (!names.insert(c).second) throw Error(ErrorCode::kDuplicateConstructor, "duplicate constructor " + c);
      all.push_back(c);
    }
  }
  FiniteFamily fam;
  fam.base = base;
  fam.total = Flat(all, name);
  std::vector<DependentGame::Entry> table{{{EmptyStrategy(base)}, FlatSubgame(fam.total, {})}};
  for (const auto& p : points) {
    table.push_back({{p.value}, FlatSubgame(fam.total, p.constructors)});
  }
  fam.family = DependentGame::FromTable(fam.total, {base}, std::move(table), name);
  fam.points = std::move(points);
  return fam;
}

Game Cwf::HomGame(const ContextGame& g, const DependentGame& y) const {
  return MultiPi(g, y, k_, limits_);
}

Strategy Cwf::Apply(const Strategy& f, std::span<const Strategy> args, const Game& result) const {
  static std::mutex mu;
  static std::unordered_map<std::string, Strategy> cache;
  std::string key = JoinKeys(f, args) + PrintGame(result);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Strategy out = Substitute(result, 0, args, f, limits_);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, out).first->second;
}

DependentGame Cwf::Reindex(const DependentGame& y, const ContextGame& source,
                           const ContextGame& target, std::span<const Strategy> parts) const {
  std::size_t r = y.arity();
  std::vector<Strategy> fs(parts.begin(), parts.begin() + r);
  std::vector<Game> results;
  for (std::size_t i = 0; i < r; ++i) results.push_back(target[i].total());
  Cwf self = *this;
  return DependentGame::FromFunction(
      y.total(), source.totals(),
      [self, y, fs, results](std::span<const Strategy> args) {
        std::vector<Strategy> values;
        for (std::size_t i = 0; i < fs.size(); ++i) values.push_back(self.Apply(fs[i], args, results[i]));
        return y.At(values);
      },
      y.name());
}

DependentGame Cwf::Weaken(const DependentGame& x, const ContextGame& g) const {
  std::size_t r = x.arity();
  return DependentGame::FromFunction(
      x.total(), g.totals(),
      [x, r](std::span<const Strategy> args) { return x.At(args.subspan(0, r)); }, x.name());
}

DependentGame Cwf::TermFibre(const TyEntry& a, std::span<const Strategy> parts, std::size_t j) const {
  DependentGame y = a.entries[j];
  std::vector<Strategy> fs(parts.begin(), parts.begin() + j);
  std::vector<Game> results;
  for (std::size_t k = 0; k < j; ++k) results.push_back(a.entries[k].total());
  Cwf self = *this;
  return DependentGame::FromFunction(
      y.total(), a.over.totals(),
      [self, y, fs, results](std::span<const Strategy> args) {
        std::vector<Strategy> values(args.begin(), args.end());
        for (std::size_t k = 0; k < fs.size(); ++k) values.push_back(self.Apply(fs[k], args, results[k]));
        return y.At(values);
      },
      y.name());
}

Morphism Cwf::Identity(const ContextGame& g) const {
  Morphism id{g, g, {}};
  for (std::size_t i = 0; i < g.size(); ++i) {
    id.parts.push_back(DerFrom(HomGame(g, Weaken(g[i], g)), g.size(), i));
  }
  return id;
}

Morphism Cwf::Compose(const Morphism& f, const Morphism& g) const {
  Morphism out{f.source, g.target, {}};
  for (std::size_t k = 0; k < g.target.size(); ++k) {
    Game game = HomGame(f.source, Reindex(g.target[k], f.source, g.target, out.parts));
    out.parts.push_back(Substitute(game, static_cast<int>(f.source.size()), f.parts, g.parts[k], limits_));
  }
  return out;
}

Morphism Cwf::P(const TyEntry& a) const {
  ContextGame ext = a.Extended();
  Morphism p{ext, a.over, {}};
  for (std::size_t i = 0; i < a.over.size(); ++i) {
    p.parts.push_back(DerFrom(HomGame(ext, Weaken(a.over[i], ext)), ext.size(), i));
  }
  return p;
}

Morphism Cwf::Projection(const ContextGame& g, std::size_t m) const {
  Morphism p{g, g.Prefix(m), {}};
  for (std::size_t i = 0; i < m; ++i) p.parts.push_back(DerFrom(HomGame(g, Weaken(g[i], g)), g.size(), i));
  return p;
}

TyEntry Cwf::WeakenType(const TyEntry& a, const ContextGame& g) const {
  std::size_t offset = a.over.size(), n = g.size();
  TyEntry out{g, {}};
  std::vector<Game> base = g.totals();
  for (const DependentGame& y : a.entries) {
    out.entries.push_back(DependentGame::FromFunction(
        y.total(), base,
        [y, offset, n](std::span<const Strategy> args) {
          std::vector<Strategy> values(args.begin(), args.begin() + offset);
          values.insert(values.end(), args.begin() + n, args.end());
          return y.At(values);
        },
        y.name()));
    base.push_back(y.total());
  }
  return out;
}

Term Cwf::Variable(const ContextGame& g, const TyEntry& a, std::size_t offset) const {
  Term v{g, WeakenType(a, g), {}};
  for (std::size_t j = 0; j < a.entries.size(); ++j) {
    v.parts.push_back(DerFrom(HomGame(g, TermFibre(v.type, v.parts, j)), g.size(), offset + j));
  }
  return v;
}

Term Cwf::V(const TyEntry& a) const {
  TyEntry ap = TySubst(a, P(a));
  ContextGame ext = a.Extended();
  Term v{ext, ap, {}};
  std::size_t n = a.over.size();
  for (std::size_t j = 0; j < a.entries.size(); ++j) {
    v.parts.push_back(DerFrom(HomGame(ext, TermFibre(ap, v.parts, j)), ext.size(), n + j));
  }
  return v;
}

Morphism Cwf::Extend(const Morphism& f, const TyEntry& a, const Term& t) const {
  Morphism out{f.source, a.Extended(), f.parts};
  out.parts.insert(out.parts.end(), t.parts.begin(), t.parts.end());
  return out;
}

Morphism Cwf::Section(const Term& t) const {
  Morphism id = Identity(t.ctx);
  return Extend(id, t.type, t);
}

TyEntry Cwf::TySubst(const TyEntry& a, const Morphism& f) const {
  TyEntry out{f.source, {}};
  std::size_t n = f.source.size();
  std::vector<Strategy> fs = f.parts;
  std::vector<Game> results = f.target.totals();
  std::vector<Game> base = f.source.totals();
  Cwf self = *this;
  for (const DependentGame& y : a.entries) {
    out.entries.push_back(DependentGame::FromFunction(
        y.total(), base,
        [self, y, fs, results, n](std::span<const Strategy> args) {
          std::vector<Strategy> values;
          auto head = args.subspan(0, n);
          for (std::size_t i = 0; i < fs.size(); ++i) values.push_back(self.Apply(fs[i], head, results[i]));
          values.insert(values.end(), args.begin() + n, args.end());
          return y.At(values);
        },
        y.name()));
    base.push_back(y.total());
  }
  return out;
}

Term Cwf::TmSubst(const Term& t, const Morphism& f) const {
  Term out{f.source, TySubst(t.type, f), {}};
  for (std::size_t j = 0; j < t.parts.size(); ++j) {
    Game game = HomGame(f.source, TermFibre(out.type, out.parts, j));
    out.parts.push_back(Substitute(game, static_cast<int>(f.source.size()), f.parts, t.parts[j], limits_));
  }
  return out;
}

bool Cwf::WellTyped(const Morphism& f) const {
  for (std::size_t j = 0; j < f.parts.size(); ++j) {
    Game g = HomGame(f.source, Reindex(f.target[j], f.source, f.target, f.parts));
    if (!IsWinning(g, f.parts[j])) return false;
  }
  return true;
}

bool Cwf::WellTyped(const Term& t) const {
  for (std::size_t j = 0; j < t.parts.size(); ++j) {
    if (!IsWinning(HomGame(t.ctx, TermFibre(t.type, t.parts, j)), t.parts[j])) return false;
  }
  return true;
}

Morphism Cwf::Retyped(const Morphism& f) const {
  Morphism out{f.source, f.target, {}};
  for (std::size_t j = 0; j < f.parts.size(); ++j) {
    Game g = HomGame(f.source, Reindex(f.target[j], f.source, f.target, out.parts));
    out.parts.push_back(Retype(f.parts[j], g));
  }
  return out;
}

Term Cwf::Retyped(const Term& t) const {
  Term out{t.ctx, t.type, {}};
  for (std::size_t j = 0; j < t.parts.size(); ++j) {
    out.parts.push_back(Retype(t.parts[j], HomGame(t.ctx, TermFibre(t.type, out.parts, j))));
  }
  return out;
}

bool Cwf::Equal(const Morphism& f, const Morphism& g) {
  if (f.parts.size() != g.parts.size()) return false;
  for (std::size_t j = 0; j < f.parts.size(); ++j) {
    if (!StrategiesEqual(f.parts[j], g.parts[j])) return false;
  }
  return true;
}

bool Cwf::Equal(const Term& t, const Term& u) {
  if (t.parts.size() != u.parts.size()) return false;
  for (std::size_t j = 0; j < t.parts.size(); ++j) {
    if (!StrategiesEqual(t.parts[j], u.parts[j])) return false;
  }
  return true;
}

bool Cwf::TypesEqual(const TyEntry& a, const TyEntry& b, std::size_t width) const {
  if (a.entries.size() != b.entries.size() || a.over.size() != b.over.size()) return false;
  ContextGame ext = a.Extended();
  for (std::size_t j = 0; j < a.entries.size(); ++j) {
    if (!SameShape(a.entries[j].total(), b.entries[j].total())) return false;
    std::size_t depth = a.over.size() + j;
    std::vector<Strategy> args;
    bool equal = true;
    std::function<void()> visit = [&]() {
      if (!equal) return;
      if (args.size() == depth) {
        equal = GamesEqual(a.entries[j].At(args), b.entries[j].At(args));
        return;
      }
      Game fibre = ext[args.size()].At(args);
      std::vector<Strategy> candidates{EmptyStrategy(ext[args.size()].total())};
      try {
        auto all = EnumerateWinning(fibre, limits_);
        for (std::size_t i = 0; i < all.size() && i < width; ++i) candidates.push_back(all[i]);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kExplosionGuard) throw;
      }
      for (const Strategy& c : candidates) {
        args.push_back(c);
        visit();
        args.pop_back();
      }
    };
    visit();
    if (!equal) return false;
  }
  return true;
}

TyEntry Cwf::Sigma(const TyEntry& a, const TyEntry& b) const {
  if (b.over.size() != a.over.size() + a.entries.size()) {
    throw Error(ErrorCode::kMismatchedGames, "Σ needs B over Γ.A");
  }
  TyEntry out = a;
  out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
  return out;
}

TyEntry Cwf::Pi(const TyEntry& a, const TyEntry& y) const {
  ContextGame ext = a.Extended();
  if (y.over.size() != ext.size()) throw Error(ErrorCode::kMismatchedGames, "Π needs Y over Γ.A");
  std::size_t n = a.over.size();
  std::vector<Game> arg_totals;
  for (const auto& e : a.entries) arg_totals.push_back(e.total());
  TyEntry out{a.over, {}};
  std::vector<Game> base = a.over.totals();
  Cwf self = *this;
  int k = k_;
  Limits limits = limits_;
  for (std::size_t j = 0; j < y.entries.size(); ++j) {
    DependentGame yj = y.entries[j];
    std::vector<Game> results;
    for (std::size_t q = 0; q < j; ++q) results.push_back(y.entries[q].total());
    Game total = Curried(arg_totals, yj.total(), k);
    out.entries.push_back(DependentGame::FromFunction(
        total, base,
        [self, ext, yj, results, n, k, limits](std::span<const Strategy> params) {
          std::vector<Strategy> fs(params.begin() + n, params.end());
          DependentGame inner = DependentGame::FromFunction(
              yj.total(), ext.totals(),
              [self, yj, fs, results, n](std::span<const Strategy> args) {
                std::vector<Strategy> values(args.begin(), args.end());
                auto alpha = args.subspan(n);
                for (std::size_t q = 0; q < fs.size(); ++q) {
                  values.push_back(self.Apply(fs[q], alpha, results[q]));
                }
                return yj.At(values);
              },
              yj.name());
          return MultiPiAt(ext, params.subspan(0, n), inner, k, false, limits);
        },
        "Π(" + yj.name() + ")"));
    base.push_back(total);
  }
  return out;
}

Term Cwf::Lambda(const TyEntry& a, const Term& body) const {
  Term out{a.over, Pi(a, body.type), {}};
  for (std::size_t j = 0; j < body.parts.size(); ++j) {
    out.parts.push_back(Retype(body.parts[j], HomGame(out.ctx, TermFibre(out.type, out.parts, j))));
  }
  return out;
}

Term Cwf::App(const Term& f, const Term& a, const TyEntry& y) const {
  Morphism sec = Section(a);
  Term out{f.ctx, TySubst(y, sec), {}};
  for (std::size_t j = 0; j < f.parts.size(); ++j) {
    Game game = HomGame(out.ctx, TermFibre(out.type, out.parts, j));
    out.parts.push_back(Substitute(game, static_cast<int>(f.ctx.size()), sec.parts, f.parts[j], limits_));
  }
  return out;
}

TyEntry Cwf::Id(const TyEntry& y, const Term& t, const Term& u) const {
  TyEntry out{y.over, {}};
  std::size_t n = y.over.size();
  std::vector<Game> base = y.over.totals();
  Cwf self = *this;
  for (std::size_t j = 0; j < y.entries.size(); ++j) {
    Game total = y.entries[j].total();
    Strategy tj = t.parts[j], uj = u.parts[j];
    out.entries.push_back(DependentGame::FromFunction(
        total, base,
        [self, tj, uj, total, n](std::span<const Strategy> args) {
          auto head = args.subspan(0, n);
          return Intersection(self.Apply(tj, head, total), self.Apply(uj, head, total), total);
        },
        "Id(" + y.entries[j].name() + ")"));
    base.push_back(total);
  }
  return out;
}

Term Cwf::Refl(const Term& t) const {
  Term out{t.ctx, Id(t.type, t, t), {}};
  for (std::size_t j = 0; j < t.parts.size(); ++j) {
    Game g = HomGame(out.ctx, TermFibre(out.type, out.parts, j));
    Strategy s = Retype(t.parts[j], g);
    if (!s.winning()) throw Error(ErrorCode::kIllTypedWitness, "refl is not winning on its Id fibre");
    out.parts.push_back(s);
  }
  return out;
}

TyEntry Cwf::IdOverPair(const TyEntry& a) const {
  TyEntry a2 = TySubst(a, P(a));
  Term x = TmSubst(V(a), P(a2));
  Term y = V(a2);
  return Id(y.type, x, y);
}

TyEntry Cwf::UipType(const TyEntry& a) const {
  TyEntry id = IdOverPair(a);
  TyEntry id2 = TySubst(id, P(id));
  Term p = TmSubst(V(id), P(id2));
  Term q = V(id2);
  return Id(q.type, p, q);
}

Term Cwf::J(const TyEntry& a, const TyEntry& c, const Term& h) const {
  std::size_t n = a.over.size(), m = a.entries.size();
  if (c.over.size() != n + 3 * m) throw Error(ErrorCode::kMismatchedGames, "J motive must live over Γ.A.A.Id");
  // h's x-block is read off the Id proof's wires.
  std::vector<std::size_t> to(n + m), back(n + 3 * m, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) to[i] = back[i] = i;
  for (std::size_t i = 0; i < m; ++i) {
    to[n + i] = n + 2 * m + i;
    back[n + 2 * m + i] = n + i;
  }
  Term out{c.over, c, {}};
  for (std::size_t j = 0; j < h.parts.size(); ++j) {
    Game g = HomGame(out.ctx, TermFibre(c, out.parts, j));
    const Strategy& hj = h.parts[j];
    out.parts.push_back(Strategy::Explore(
        g,
        [&, n, m](const Play& s) -> std::optional<Move> {
          Play local;
          for (const Move& mv : s) {
            std::size_t comp = Component(mv, n + 3 * m);
            if (comp < n + 3 * m && back[comp] == SIZE_MAX) return std::nullopt;
            local.push_back(Rename(mv, n + 3 * m, n + m, back));
          }
          Canonical cl = Canonicalize(local);
          auto r = hj.Respond(cl.play);
          if (!r) return std::nullopt;
          return Rename(Decanonicalize(hj.game(), cl, *r), n + m, n + 3 * m, to);
        },
        Strictness::kLenient));
  }
  return out;
}

Term Cwf::Uip(const TyEntry& a) const {
  TyEntry t = UipType(a);
  std::size_t n = a.over.size(), m = a.entries.size();
  Term out{t.over, t, {}};
  for (std::size_t j = 0; j < t.entries.size(); ++j) {
    Game g = HomGame(out.ctx, TermFibre(t, out.parts, j));
    out.parts.push_back(DerFrom(g, t.over.size(), n + 2 * m + j));
  }
  return out;
}

TyEntry Cwf::FamilyAt(const ContextGame& g, const FiniteFamily& fam, int point) const {
  Game fibre = fam.family.At({fam.points[point].value});
  return {g, {DependentGame::FromFunction(
                 fam.total, g.totals(), [fibre](std::span<const Strategy>) { return fibre; },
                 fam.family.name())}};
}

TyEntry Cwf::FamilyOver(const ContextGame& g, const FiniteFamily& fam) const {
  DependentGame b = fam.family;
  return {g, {DependentGame::FromFunction(
                 fam.total, g.totals(),
                 [b](std::span<const Strategy> args) { return b.At({args.back()}); }, b.name())}};
}

Term Cwf::Constructor(const ContextGame& g, const FiniteFamily& fam, const std::string& name) const {
  auto [i, j] = fam.Find(name);
  if (i < 0) throw Error(ErrorCode::kType, "unknown constructor " + name);
  TyEntry type = FamilyAt(g, fam, i);
  std::size_t n = g.size();
  Game game = HomGame(g, TermFibre(type, {}, 0));
  Strategy s = Strategy::Explore(game, [n, name](const Play& p) -> std::optional<Move> {
    if (p.size() != 1) return std::nullopt;
    return Move{Rights(n), name};
  });
  return {g, type, {s}};
}

Term Cwf::Case(const ContextGame& g, const FiniteFamily& fam, const TyEntry& c,
               const std::map<std::string, Term>& branches) const {
  std::size_t n = g.size();
  if (c.over.size() != n + 2) throw Error(ErrorCode::kMismatchedGames, "case motive must live over Γ.x.y");
  std::vector<Tag> y_path = ArgPrefix(n + 1);
  y_path.push_back(Thread(0));
  std::vector<std::size_t> back(n + 2, SIZE_MAX), to(n);
  for (std::size_t i = 0; i < n; ++i) back[i] = to[i] = i;
  Term out{c.over, c, {}};
  for (std::size_t j = 0; j < c.entries.size(); ++j) {
    Game game = HomGame(out.ctx, TermFibre(c, out.parts, j));
    out.parts.push_back(Strategy::Explore(
        game,
        [&, n, j](const Play& s) -> std::optional<Move> {
          if (s.size() == 1) return Move{y_path, std::string(kQuestionName)};
          if (s.size() < 3 || s[2].path != y_path) return std::nullopt;
          auto it = branches.find(s[2].base);
          if (it == branches.end()) return std::nullopt;
          const Strategy& z = it->second.parts[j];
          Play local{Rename(s[0], n + 2, n, back)};
          for (std::size_t i = 3; i < s.size(); ++i) {
            std::size_t comp = Component(s[i], n + 2);
            if (comp < n + 2 && back[comp] == SIZE_MAX) return std::nullopt;
            local.push_back(Rename(s[i], n + 2, n, back));
          }
          Canonical cl = Canonicalize(local);
          auto r = z.Respond(cl.play);
          if (!r) return std::nullopt;
          return Rename(Decanonicalize(z.game(), cl, *r), n, n + 2, to);
        },
        Strictness::kLenient));
  }
  return out;
}

Term Cwf::Exfalso(const TyEntry& id, const TyEntry& c) const {
  std::size_t n = id.over.size();
  if (c.over.size() != n + 1) throw Error(ErrorCode::kMismatchedGames, "exfalso motive must live over Γ.p");
  Term out{c.over, c, {}};
  for (std::size_t j = 0; j < c.entries.size(); ++j) {
    Game game = HomGame(out.ctx, TermFibre(c, out.parts, j));
    Game total = Total(game);
    out.parts.push_back(Strategy::Explore(
        game,
        [total, n](const Play& s) -> std::optional<Move> {
          std::size_t want = s.size() == 1 ? n : n + 1;
          for (const Move& b : LegalPlayerMoves(total, s)) {
            if (Component(b, n + 1) == want) return b;
          }
          return std::nullopt;
        },
        Strictness::kLenient));
  }
  return out;
}

}  // namespace dttg
