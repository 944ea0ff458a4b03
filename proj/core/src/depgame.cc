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

#include "dttg/depgame.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

namespace dttg {

namespace {

std::string ArgsKey(std::span<const Strategy> args) {
  std::string key;
  for (const Strategy& s : args) {
    key += s.key();
    key += '$';
  }
  return key;
}

bool IsBottom(const Strategy& s) { return s.plays().size() <= 1; }

bool PointwiseLeq(std::span<const Strategy> a, std::span<const Strategy> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (IsBottom(a[i]) || a[i].key() == b[i].key()) continue;
    if (!StrategyLeq(a[i], b[i])) return false;
  }
  return true;
}

template <typename V>
class WriteOnceCache {
 public:
  std::optional<V> Get(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  V Put(const std::string& key, V value) {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::string, V> map_;
};

}  // namespace

struct DependentGame::State {
  Game total;
  std::vector<Game> base;
  std::string name;
  std::vector<Entry> table;
  Fibre fibre;
  WriteOnceCache<Game> cache;
};

const Game& DependentGame::total() const { return state_->total; }
const std::vector<Game>& DependentGame::base() const { return state_->base; }
const std::string& DependentGame::name() const { return state_->name; }
const std::vector<DependentGame::Entry>* DependentGame::table() const {
  return state_->table.empty() ? nullptr : &state_->table;
}

DependentGame DependentGame::Constant(Game g, std::vector<Game> base) {
  return FromFunction(g, std::move(base), [g](std::span<const Strategy>) { return g; },
                      Root(g).label);
}

DependentGame DependentGame::FromFunction(Game total, std::vector<Game> base, Fibre fibre,
                                          std::string name) {
  DependentGame out;
  out.state_ = std::make_shared<State>();
  out.state_->total = std::move(total);
  out.state_->base = std::move(base);
  out.state_->fibre = std::move(fibre);
  out.state_->name = std::move(name);
  return out;
}

DependentGame DependentGame::FromTable(Game total, std::vector<Game> base,
                                       std::vector<Entry> table, std::string name) {
  std::set<std::string> seen;
  bool has_bottom = false;
  for (const Entry& e : table) {
    if (e.key.size() != base.size()) {
      throw Error(ErrorCode::kMismatchedGames, "table key has the wrong arity");
    }
    if (!SubgameLeq(e.game, total)) {
      throw Error(ErrorCode::kMismatchedGames, "table image is not a subgame of the total game");
    }
    if (!seen.insert(ArgsKey(e.key)).second) {
      throw Error(ErrorCode::kDuplicatePoint, "duplicate table key");
    }
    has_bottom = has_bottom || std::all_of(e.key.begin(), e.key.end(), IsBottom);
  }
  if (!has_bottom) throw Error(ErrorCode::kMismatchedGames, "table has no entry for ⊥");
  for (const Entry& a : table) {
    for (const Entry& b : table) {
      if (&a != &b && PointwiseLeq(a.key, b.key) && !SubgameLeq(a.game, b.game)) {
        throw Error(ErrorCode::kMismatchedGames, "table is not monotone");
      }
    }
  }
  DependentGame out;
  out.state_ = std::make_shared<State>();
  out.state_->total = std::move(total);
  out.state_->base = std::move(base);
  out.state_->table = std::move(table);
  out.state_->name = std::move(name);
  return out;
}

Game DependentGame::At(std::span<const Strategy> args) const {
  if (args.size() > base().size()) {
    throw Error(ErrorCode::kMismatchedGames, "too many parameters for " + name());
  }
  std::vector<Strategy> padded(args.begin(), args.end());
  for (std::size_t i = padded.size(); i < base().size(); ++i) padded.push_back(BottomArg(i));
  std::string key = ArgsKey(padded);
  if (auto hit = state_->cache.Get(key)) return *hit;
  Game g = state_->fibre ? state_->fibre(padded) : ApplyDep(*this, padded);
  return state_->cache.Put(key, std::move(g));
}

Game ApplyDep(const DependentGame& b, std::span<const Strategy> args) {
  const auto* table = b.table();
  if (!table) return b.At(args);
  std::vector<Strategy> padded(args.begin(), args.end());
  for (std::size_t i = padded.size(); i < b.base().size(); ++i) padded.push_back(b.BottomArg(i));
  Game acc;
  for (const auto& e : *table) {
    if (!PointwiseLeq(e.key, padded)) continue;
    if (!acc) {
      acc = e.game;
    } else if (!SubgameLeq(e.game, acc)) {
      acc = SubgameLeq(acc, e.game) ? e.game : MeetJoin(acc, e.game).second;
    }
  }
  return acc;
}

bool DependentGamesEqual(const DependentGame& a, const DependentGame& b) {
  if (!SameShape(a.total(), b.total()) || a.arity() != b.arity()) return false;
  const auto* ta = a.table();
  const auto* tb = b.table();
  if (!ta || !tb) return ta == tb && a.name() == b.name();
  if (ta->size() != tb->size()) return false;
  auto sorted = [](const std::vector<DependentGame::Entry>& t) {
    std::map<std::string, Game> m;
    for (const auto& e : t) m[ArgsKey(e.key)] = e.game;
    return m;
  };
  auto ma = sorted(*ta), mb = sorted(*tb);
  for (auto ia = ma.begin(), ib = mb.begin(); ia != ma.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (!SubgameLeq(ia->second, ib->second) || !SubgameLeq(ib->second, ia->second)) return false;
  }
  return true;
}

ContextGame::ContextGame(std::vector<DependentGame> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& base = entries_[i].base();
    if (base.size() != i) {
      throw Error(ErrorCode::kMismatchedGames,
                  "context entry " + std::to_string(i) + " depends on " +
                      std::to_string(base.size()) + " games");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!SameShape(base[j], entries_[j].total())) {
        throw Error(ErrorCode::kMismatchedGames, "context entry base does not match its prefix");
      }
    }
  }
}

std::vector<Game> ContextGame::totals() const {
  std::vector<Game> out;
  for (const auto& e : entries_) out.push_back(e.total());
  return out;
}

ContextGame ContextGame::Extend(const DependentGame& x) const {
  auto entries = entries_;
  entries.push_back(x);
  return ContextGame(std::move(entries));
}

ContextGame ContextGame::Prefix(std::size_t n) const {
  return ContextGame(std::vector<DependentGame>(entries_.begin(), entries_.begin() + n));
}

std::string Observation::Key() const {
  std::string key;
  for (const auto& k : keys) {
    key += k;
    key += '#';
  }
  return key;
}

void Observation::Add(const Play& p) {
  Play c = CanonicalPlay(p);
  if (keys.insert(PlayKey(c)).second) plays.push_back(std::move(c));
}

bool Observation::Within(const Strategy& s) const {
  return std::includes(s.play_keys().begin(), s.play_keys().end(), keys.begin(), keys.end());
}

Observation Observed(const Play& s) {
  std::map<Tag, Play> threads;
  for (const Move& m : s) {
    threads[m.path.front()].push_back({std::vector<Tag>(m.path.begin() + 1, m.path.end()), m.base});
  }
  Observation out;
  for (const auto& [tag, play] : threads) {
    for (std::size_t n = 2; n <= play.size(); n += 2) out.Add(Play(play.begin(), play.begin() + n));
  }
  return out;
}

namespace {

using Maps = std::vector<ResponseMap>;

Maps EnumerateConstrained(const Game& g, const Play& s,
                          const std::map<std::string, std::string>& required,
                          const Limits& limits) {
  Maps result{ResponseMap{}};
  for (const Move& a : LegalOpponentMoves(g, s)) {
    Play sa = s;
    sa.push_back(a);
    sa = CanonicalPlay(sa);
    std::string key = PlayKey(sa);
    auto req = required.find(key);
    Maps options;
    for (const Move& b : LegalPlayerMoves(g, sa)) {
      Play sab = sa;
      sab.push_back(b);
      sab = CanonicalPlay(sab);
      if (req != required.end() && PlayKey(sab) != req->second) continue;
      for (ResponseMap& sub : EnumerateConstrained(g, sab, required, limits)) {
        sub[key] = sab.back();
        options.push_back(std::move(sub));
        if (options.size() > limits.max_enum) {
          throw Error(ErrorCode::kExplosionGuard, "too many consistent strategies on " + PrintGame(g));
        }
      }
    }
    if (options.empty()) return {};
    if (result.size() * options.size() > limits.max_enum) {
      throw Error(ErrorCode::kExplosionGuard, "too many consistent strategies on " + PrintGame(g));
    }
    Maps next;
    next.reserve(result.size() * options.size());
    for (const ResponseMap& r : result) {
      for (const ResponseMap& o : options) {
        ResponseMap merged = r;
        merged.insert(o.begin(), o.end());
        next.push_back(std::move(merged));
      }
    }
    result = std::move(next);
  }
  return result;
}

}  // namespace

std::vector<Strategy> ConsistentExtensions(const Game& a, const Observation& obs,
                                           const Limits& limits) {
  static WriteOnceCache<std::pair<Game, std::vector<Strategy>>> cache;
  std::string key = std::to_string(reinterpret_cast<std::uintptr_t>(a.get())) + "@" + obs.Key();
  if (auto hit = cache.Get(key)) return hit->second;
  std::vector<Strategy> out;
  if (obs.empty()) {
    out = EnumerateWinning(a, limits);
  } else {
    std::map<std::string, std::string> required;
    bool consistent = true;
    for (const Play& p : obs.plays) {
      if (!IsPlay(a, p)) {
        consistent = false;
        break;
      }
      for (std::size_t n = 1; n < p.size(); n += 2) {
        std::string odd = PlayKey(Play(p.begin(), p.begin() + n));
        std::string even = PlayKey(Play(p.begin(), p.begin() + n + 1));
        auto [it, inserted] = required.emplace(odd, even);
        if (!inserted && it->second != even) consistent = false;
      }
    }
    if (consistent) {
      for (const ResponseMap& r : EnumerateConstrained(a, {}, required, limits)) {
        out.push_back(Strategy::FromResponses(a, r));
      }
      std::sort(out.begin(), out.end(),
                [](const Strategy& x, const Strategy& y) { return x.key() < y.key(); });
    }
  }
  return cache.Put(key, {a, std::move(out)}).second;
}

namespace {

// P-moves safe for every consistent choice of the quantified parameters;
// O-moves free, or (exists_o) legal for some consistent choice.
class PiConstraint : public PlayConstraint {
 public:
  PiConstraint(std::vector<Strategy> params, std::vector<DependentGame> quantified,
               DependentGame result, int k, bool exists_o, Limits limits)
      : params_(std::move(params)),
        quantified_(std::move(quantified)),
        result_(std::move(result)),
        k_(k),
        exists_o_(exists_o),
        limits_(limits) {}

  bool AdmitsLast(const Play& s) const override {
    if (s.empty()) return true;
    bool odd = s.size() % 2 == 1;
    if (odd && !exists_o_) return true;
    std::vector<Observation> obs;
    for (std::size_t q = 0; q < quantified_.size(); ++q) {
      std::vector<Tag> prefix(q, kRight);
      prefix.push_back(kLeft);
      obs.push_back(Observed(RestrictPath(s, prefix)));
    }
    Play prev(s.begin(), s.end() - 1);
    std::vector<Strategy> taus = params_;
    std::map<const void*, bool> memo;
    auto memoized = [&memo](const Game& g, auto&& f) {
      auto [it, inserted] = memo.emplace(g.get(), false);
      if (inserted) it->second = f(g);
      return it->second;
    };
    if (odd) {
      return Search(taus, obs,
                    [&](const Game& g) {
                      return memoized(g, [&](const Game& h) { return IsPlay(h, s); });
                    },
                    true);
    }
    return Search(taus, obs,
                  [&](const Game& g) {
                    return memoized(g, [&](const Game& h) { return !IsPlay(h, prev) || IsPlay(h, s); });
                  },
                  false);
  }

  std::string Describe() const override {
    std::string out = exists_o_ ? "Π(" : "Osat(Π(";
    for (const auto& q : quantified_) out += (q.name().empty() ? PrintGame(q.total()) : q.name()) + ",";
    out += result_.name().empty() ? PrintGame(result_.total()) : result_.name();
    return out + (exists_o_ ? ")" : "))");
  }

  Game Instance(const std::vector<Strategy>& taus) const {
    std::vector<Game> args;
    for (std::size_t q = 0; q < quantified_.size(); ++q) {
      args.push_back(quantified_[q].At(std::span<const Strategy>(taus.data(), params_.size() + q)));
    }
    Game result = result_.At(taus);
    // Fibres are cached per parameter, so equal fibres share a node.
    std::string key;
    for (const Game& g : args) key += std::to_string(reinterpret_cast<std::uintptr_t>(g.get())) + ",";
    key += std::to_string(reinterpret_cast<std::uintptr_t>(result.get()));
    if (auto hit = instances_.Get(key)) return *hit;
    return instances_.Put(key, Curried(args, result, k_));
  }

 private:
  // Existential (any) or universal (all) search over consistent parameters.
  template <typename Pred>
  bool Search(std::vector<Strategy>& taus, const std::vector<Observation>& obs, const Pred& pred,
              bool any) const {
    std::size_t q = taus.size() - params_.size();
    if (q == quantified_.size()) return pred(Instance(taus));
    Game fibre = quantified_[q].At(taus);
    for (const Strategy& tau : ConsistentExtensions(fibre, obs[q], limits_)) {
      taus.push_back(tau);
      bool r = Search(taus, obs, pred, any);
      taus.pop_back();
      if (r == any) return any;
    }
    return !any;
  }

  std::vector<Strategy> params_;
  std::vector<DependentGame> quantified_;
  DependentGame result_;
  int k_;
  bool exists_o_;
  Limits limits_;
  mutable WriteOnceCache<Game> instances_;
};

Game CarvedPi(std::vector<Strategy> params, std::vector<DependentGame> quantified,
              const DependentGame& y, int k, bool exists_o, const Limits& limits) {
  std::vector<Game> totals;
  for (const auto& q : quantified) totals.push_back(q.total());
  Game total = Curried(totals, y.total(), k);
  if (quantified.empty() && exists_o) return y.At(params);
  auto c = std::make_shared<PiConstraint>(std::move(params), std::move(quantified), y, k, exists_o,
                                          limits);
  std::string label = c->Describe();
  return CarvedSubgame(total, std::move(c), label);
}

}  // namespace

DependentGame PiGame(const DependentGame& xn, const DependentGame& xn1, int k,
                     const Limits& limits) {
  if (xn1.arity() != xn.arity() + 1) {
    throw Error(ErrorCode::kMismatchedGames, "Π needs B to depend on A's context extended by A");
  }
  Game total = Arrow(xn.total(), xn1.total(), k);
  return DependentGame::FromFunction(
      total, xn.base(),
      [xn, xn1, k, limits](std::span<const Strategy> params) {
        return CarvedPi(std::vector<Strategy>(params.begin(), params.end()), {xn}, xn1, k, true,
                        limits);
      },
      "Π(" + xn.name() + "," + xn1.name() + ")");
}

Game Osat(const DependentGame& a, const DependentGame& b, int k, const Limits& limits) {
  return MultiPi(ContextGame({a}), b, k, limits);
}

namespace {

class SaturateConstraint : public PlayConstraint {
 public:
  explicit SaturateConstraint(Game sub) : sub_(std::move(sub)) {}
  bool AdmitsLast(const Play& s) const override {
    if (s.size() % 2 == 1) return true;
    Play prev(s.begin(), s.end() - 1);
    return !IsPlay(sub_, prev) || IsPlay(sub_, s);
  }
  std::string Describe() const override { return "Osat(" + PrintGame(sub_) + ")"; }

 private:
  Game sub_;
};

}  // namespace

Game Saturate(const Game& sub) {
  auto c = std::make_shared<SaturateConstraint>(sub);
  std::string label = c->Describe();
  return CarvedSubgame(Total(sub), std::move(c), label);
}

Game MultiPi(const ContextGame& ctx, const DependentGame& y, int k, const Limits& limits) {
  return MultiPiAt(ctx, {}, y, k, false, limits);
}

Game MultiPiAt(const ContextGame& ctx, std::span<const Strategy> params, const DependentGame& y,
               int k, bool exists_o, const Limits& limits) {
  if (static_cast<std::size_t>(y.arity()) != ctx.size() || params.size() > ctx.size()) {
    throw Error(ErrorCode::kMismatchedGames, "dependent game does not match its context");
  }
  std::vector<DependentGame> quantified(ctx.entries().begin() + params.size(), ctx.entries().end());
  return CarvedPi(std::vector<Strategy>(params.begin(), params.end()), std::move(quantified), y, k,
                  exists_o, limits);
}

Strategy StrategyFromPlays(const Game& g, const std::vector<Play>& plays, Strictness mode) {
  ResponseMap r;
  for (const Play& p0 : plays) {
    if (p0.size() % 2 != 0) throw Error(ErrorCode::kMalformedPlay, "odd play " + ToString(p0));
    Play p = CanonicalPlay(p0);
    for (std::size_t n = 1; n < p.size(); n += 2) {
      std::string key = PlayKey(Play(p.begin(), p.begin() + n));
      auto [it, inserted] = r.emplace(key, p[n]);
      if (!inserted && it->second != p[n]) {
        throw Error(ErrorCode::kNondeterministicClosure,
                    "two responses at " + ToString(Play(p.begin(), p.begin() + n)));
      }
    }
  }
  return Strategy::FromResponses(g, r, mode);
}

}  // namespace dttg
