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

#include "dttg/strategy.h"

#include <algorithm>
#include <mutex>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace dttg {

namespace {

struct LabeledMove {
  Move move;
  MoveLabel label;
};

// Moves of a game with labels, cached per game node.
const std::vector<LabeledMove>& LabeledMoves(const Game& g) {
  static std::mutex mu;
  static std::unordered_map<const GameNode*, std::pair<Game, std::shared_ptr<std::vector<LabeledMove>>>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g.get());
  if (it != cache.end()) return *it->second.second;
  auto moves = std::make_shared<std::vector<LabeledMove>>();
  for (Move& m : Moves(g)) {
    MoveLabel l = *Label(g, m);
    moves->push_back({std::move(m), l});
  }
  cache.emplace(g.get(), std::make_pair(g, moves));
  return *moves;
}

std::vector<Move> LegalMoves(const Game& g, const Play& s, Polarity who) {
  std::vector<Move> out;
  std::unordered_set<std::string> seen;
  Play t = s;
  t.emplace_back();
  for (const LabeledMove& lm : LabeledMoves(g)) {
    if (lm.label.polarity != who) continue;
    if (std::find(s.begin(), s.end(), lm.move) != s.end()) continue;
    t.back() = lm.move;
    if (!ExtendsPlay(g, t)) continue;
    if (seen.insert(CanonicalKey(t)).second) out.push_back(lm.move);
  }
  return out;
}

Move Prepend(std::vector<Tag> prefix, const Move& m) {
  prefix.insert(prefix.end(), m.path.begin(), m.path.end());
  return {std::move(prefix), m.base};
}

Move Strip(const Move& m, std::size_t n) {
  return {std::vector<Tag>(m.path.begin() + n, m.path.end()), m.base};
}

std::size_t LeadingRights(const Move& m, std::size_t limit) {
  std::size_t r = 0;
  while (r < limit && r < m.path.size() && m.path[r] == kRight) ++r;
  return r;
}

// Asks `s` for its response at the (actual) odd play `pos`, translated back
// into the coordinates of `pos`.
std::optional<Move> AskActual(const Strategy& s, const Play& pos) {
  Canonical c = Canonicalize(pos);
  auto r = s.Respond(c.play);
  if (!r) return std::nullopt;
  return Decanonicalize(s.game(), c, *r);
}

}  // namespace

Strategy Assembled(Game g, ResponseMap responses, std::vector<Play> plays, bool winning) {
  return Strategy::Assemble(std::move(g), std::move(responses), std::move(plays), winning);
}

namespace {

Strategy ExploreImpl(Game g, const PositionFunction& respond, Strictness mode,
                     bool check_determinacy, bool canonical_positions) {
  ResponseMap responses;
  std::vector<Play> plays{Play{}};
  bool winning = true;
  std::unordered_set<std::string> visited;
  std::vector<Play> stack{Play{}};
  while (!stack.empty()) {
    Play s = std::move(stack.back());
    stack.pop_back();
    for (const Move& a : LegalOpponentMoves(g, s)) {
      Play sa = s;
      sa.push_back(a);
      Canonical ca = Canonicalize(sa);
      std::string key = PlayKey(ca.play);
      if (canonical_positions) sa = ca.play;
      if (!visited.insert(key).second) {
        if (check_determinacy) {
          auto b = respond(sa);
          auto it = responses.find(key);
          if (b && it != responses.end()) {
            Play sab = sa;
            sab.push_back(*b);
            if (CanonicalPlay(sab).back() != it->second) {
              throw Error(ErrorCode::kNondeterministicClosure,
                          "≈-equivalent positions answered differently at " + ToString(sa));
            }
          }
        }
        continue;
      }
      auto b = respond(sa);
      if (!b) {
        winning = false;
        continue;
      }
      Play sab = sa;
      sab.push_back(*b);
      if (std::find(sa.begin(), sa.end(), *b) != sa.end() || !ExtendsPlay(g, sab)) {
        if (mode == Strictness::kStrict) {
          throw Error(ErrorCode::kIllegalResponse,
                      "response " + ToString(*b) + " is illegal after " + ToString(sa));
        }
        winning = false;
        continue;
      }
      Play canon = CanonicalPlay(sab);
      responses[key] = canon.back();
      plays.push_back(canon);
      stack.push_back(canonical_positions ? std::move(canon) : std::move(sab));
    }
  }
  return Assembled(std::move(g), std::move(responses), std::move(plays), winning);
}

}  // namespace

std::vector<Move> LegalOpponentMoves(const Game& g, const Play& s) {
  return LegalMoves(g, s, Polarity::kO);
}

std::vector<Move> LegalPlayerMoves(const Game& g, const Play& s) {
  return LegalMoves(g, s, Polarity::kP);
}

std::optional<Move> Strategy::Respond(const Play& canonical_odd) const {
  auto it = responses_->find(PlayKey(canonical_odd));
  if (it == responses_->end()) return std::nullopt;
  return it->second;
}

Strategy Strategy::FromResponses(Game g, const ResponseMap& table, Strictness mode) {
  auto responses = std::make_shared<ResponseMap>();
  auto plays = std::make_shared<std::vector<Play>>();
  plays->push_back({});
  bool winning = true;
  std::vector<Play> stack{Play{}};
  std::unordered_set<std::string> visited;
  while (!stack.empty()) {
    Play s = std::move(stack.back());
    stack.pop_back();
    for (const Move& a : LegalOpponentMoves(g, s)) {
      Play sa = s;
      sa.push_back(a);
      sa = CanonicalPlay(sa);
      std::string key = PlayKey(sa);
      if (!visited.insert(key).second) continue;
      auto it = table.find(key);
      if (it == table.end()) {
        winning = false;
        continue;
      }
      Play sab = sa;
      sab.push_back(it->second);
      if (std::find(sa.begin(), sa.end(), it->second) != sa.end() || !ExtendsPlay(g, sab)) {
        if (mode == Strictness::kStrict) {
          throw Error(ErrorCode::kIllegalResponse,
                      "response " + ToString(it->second) + " is illegal after " + ToString(sa));
        }
        winning = false;
        continue;
      }
      (*responses)[key] = it->second;
      plays->push_back(sab);
      stack.push_back(std::move(sab));
    }
  }
  return Assemble(std::move(g), std::move(*responses), std::move(*plays), winning);
}

Strategy Strategy::Assemble(Game g, ResponseMap responses, std::vector<Play> plays, bool winning) {
  Strategy out;
  std::sort(plays.begin(), plays.end(),
            [](const Play& a, const Play& b) { return PlayKey(a) < PlayKey(b); });
  auto keys = std::make_shared<std::set<std::string>>();
  std::string joined;
  for (const Play& p : plays) {
    std::string k = PlayKey(p);
    joined += k;
    joined += '#';
    keys->insert(std::move(k));
  }
  out.game_ = std::move(g);
  out.responses_ = std::make_shared<ResponseMap>(std::move(responses));
  out.plays_ = std::make_shared<std::vector<Play>>(std::move(plays));
  out.keys_ = std::move(keys);
  out.key_ = std::make_shared<std::string>(std::move(joined));
  out.winning_ = winning;
  return out;
}

Strategy Strategy::Explore(Game g, const PositionFunction& respond, Strictness mode,
                           bool check_determinacy) {
  return ExploreImpl(std::move(g), respond, mode, check_determinacy, false);
}

Strategy StrategyFromFunction(Game g, const MoveFunction& f, Strictness mode) {
  return ExploreImpl(
      std::move(g), [&f](const Play& s) { return f(s.back()); }, mode, true, false);
}

Strategy Retype(const Strategy& s, Game g, Strictness mode) {
  return Strategy::FromResponses(std::move(g), s.responses(), mode);
}

bool IsWinning(const Game& g, const Strategy& s) {
  if (s.game() == g) return s.winning();
  return Retype(s, g, Strictness::kLenient).winning();
}

bool StrategiesEqual(const Strategy& a, const Strategy& b) {
  return SameShape(Total(a.game()), Total(b.game()), true) && a.key() == b.key();
}

bool StrategyLeq(const Strategy& a, const Strategy& b) {
  return std::includes(b.play_keys().begin(), b.play_keys().end(), a.play_keys().begin(),
                       a.play_keys().end());
}

bool SkeletonHistoryFree(const Game& g, const MoveFunction& f) {
  // Skeleton without ≈-deduplication, capped.
  std::vector<Play> skeleton{Play{}};
  std::map<Move, Move> seen_pairs;
  for (std::size_t i = 0; i < skeleton.size() && skeleton.size() < 20000; ++i) {
    const Play s = skeleton[i];
    for (const Move& a : Moves(g)) {
      if (Label(g, a)->polarity != Polarity::kO) continue;
      if (std::find(s.begin(), s.end(), a) != s.end()) continue;
      Play sa = s;
      sa.push_back(a);
      if (!ExtendsPlay(g, sa)) continue;
      auto b = f(a);
      if (!b) continue;
      // HF1: a response is a function of the O-move alone.
      auto [it, inserted] = seen_pairs.emplace(a, *b);
      if (!inserted && it->second != *b) return false;
      Play sab = sa;
      sab.push_back(*b);
      bool legal = std::find(sa.begin(), sa.end(), *b) == sa.end() && ExtendsPlay(g, sab);
      // HF2: once `a b` occurs in the skeleton, it is playable wherever `a` is.
      bool occurred = !inserted;
      if (!legal) {
        if (occurred) return false;
        continue;
      }
      skeleton.push_back(std::move(sab));
    }
  }
  return true;
}

Strategy EmptyStrategy(Game g) { return Strategy::FromResponses(std::move(g), {}); }

Strategy ConstantStrategy(Game flat, const std::string& answer) {
  ResponseMap r;
  r[PlayKey({Move{{}, std::string(kQuestionName)}})] = Move{{}, answer};
  return Strategy::FromResponses(std::move(flat), r);
}

Strategy Copycat(const Game& a) {
  return StrategyFromFunction(Lollipop(a, a), [](const Move& m) -> std::optional<Move> {
    Move out = m;
    out.path.front() = m.path.front() == kLeft ? kRight : kLeft;
    return out;
  });
}

Strategy Compose(const Strategy& sigma, const Strategy& tau, const Limits& limits) {
  const GameNode& sg = Root(sigma.game());
  const GameNode& tg = Root(tau.game());
  if (sg.kind != GameKind::kLollipop || tg.kind != GameKind::kLollipop ||
      !SameShape(sg.right, tg.left)) {
    throw Error(ErrorCode::kMismatchedGames, "compose needs A -o B and B -o C");
  }
  Game result = Lollipop(sg.left, tg.right);
  enum Loc { kA, kB, kC };
  auto respond = [&](const Play& s) -> std::optional<Move> {
    std::vector<std::pair<Loc, Move>> events;
    auto play_of = [&](bool of_sigma) {
      Play p;
      for (const auto& [loc, m] : events) {
        if (of_sigma && loc != kC) p.push_back(Prepend({loc == kA ? kLeft : kRight}, m));
        if (!of_sigma && loc != kA) p.push_back(Prepend({loc == kB ? kLeft : kRight}, m));
      }
      return p;
    };
    std::optional<Move> out;
    for (std::size_t idx = 0; idx < s.size(); idx += 2) {
      const Move& o = s[idx];
      bool ask_sigma = o.path.front() == kLeft;
      events.emplace_back(ask_sigma ? kA : kC, Strip(o, 1));
      std::size_t steps = 0;
      out.reset();
      while (!out) {
        if (++steps > limits.max_interaction) {
          throw Error(ErrorCode::kLivelockDetected, "interaction exceeded bound after " + ToString(s));
        }
        const Strategy& who = ask_sigma ? sigma : tau;
        auto r = AskActual(who, play_of(ask_sigma));
        if (!r) return std::nullopt;
        Tag side = r->path.front();
        Move inner = Strip(*r, 1);
        if (ask_sigma && side == kLeft) {
          events.emplace_back(kA, inner);
          out = Prepend({kLeft}, inner);
        } else if (!ask_sigma && side == kRight) {
          events.emplace_back(kC, inner);
          out = Prepend({kRight}, inner);
        } else {
          events.emplace_back(kB, inner);
          ask_sigma = !ask_sigma;
        }
      }
      if (idx + 1 < s.size() && *out != s[idx + 1]) {
        throw Error(ErrorCode::kNondeterministicClosure, "composite replay diverged at " + ToString(s));
      }
    }
    return out;
  };
  return ExploreImpl(result, respond, Strictness::kLenient, false, true);
}

Strategy Dereliction(const Game& a, int k) {
  return StrategyFromFunction(Lollipop(Bang(a, k), a), [](const Move& m) -> std::optional<Move> {
    if (m.path.front() == kRight) return Prepend({kLeft, Thread(0)}, Strip(m, 1));
    return Prepend({kRight}, Strip(m, 2));
  });
}

Strategy Digging(const Game& a, int k, int inner, bool column_major) {
  Game g = Lollipop(Bang(a, k * inner), Bang(Bang(a, inner), k));
  auto pair = [=](int i, int j) { return column_major ? j * k + i : i * inner + j; };
  return StrategyFromFunction(g, [=](const Move& m) -> std::optional<Move> {
    if (m.path.front() == kRight) {
      int i = ThreadIndex(m.path[1]), j = ThreadIndex(m.path[2]);
      return Prepend({kLeft, Thread(pair(i, j))}, Strip(m, 3));
    }
    int n = ThreadIndex(m.path[1]);
    int i = column_major ? n % k : n / inner;
    int j = column_major ? n / k : n % inner;
    return Prepend({kRight, Thread(i), Thread(j)}, Strip(m, 2));
  });
}

Strategy Diagonal(const Game& a, int k) {
  if (k < 2) throw Error(ErrorCode::kBoundExceeded, "diag needs two threads");
  return StrategyFromFunction(Lollipop(Bang(a, k), With(a, a)),
                              [](const Move& m) -> std::optional<Move> {
                                if (m.path.front() == kRight) {
                                  Tag t = m.path[1] == kLeft ? Thread(0) : Thread(1);
                                  return Prepend({kLeft, t}, Strip(m, 2));
                                }
                                Tag side = m.path[1] == Thread(0) ? kLeft : kRight;
                                return Prepend({kRight, side}, Strip(m, 2));
                              });
}

Strategy BangFunctor(const Strategy& sigma, int k) {
  const GameNode& sg = Root(sigma.game());
  if (sg.kind != GameKind::kLollipop) throw Error(ErrorCode::kMismatchedGames, "!σ needs A -o B");
  Game g = Lollipop(Bang(sg.left, k), Bang(sg.right, k));
  return Strategy::Explore(g, [&](const Play& s) -> std::optional<Move> {
    Tag thread = s.back().path[1];
    Play local;
    for (const Move& m : s) {
      if (m.path[1] != thread) continue;
      Move l = Strip(m, 2);
      local.push_back(Prepend({m.path[0]}, l));
    }
    auto r = AskActual(sigma, local);
    if (!r) return std::nullopt;
    return Prepend({r->path[0], thread}, Strip(*r, 1));
  });
}

Strategy SeelyForward(const Game& a, const Game& b, int k) {
  Game g = Lollipop(Bang(With(a, b), 2 * k), Tensor(Bang(a, k), Bang(b, k)));
  return StrategyFromFunction(g, [](const Move& m) -> std::optional<Move> {
    if (m.path.front() == kRight) {
      Tag side = m.path[1];
      int i = ThreadIndex(m.path[2]);
      return Prepend({kLeft, Thread(2 * i + (side == kRight ? 1 : 0)), side}, Strip(m, 3));
    }
    int n = ThreadIndex(m.path[1]);
    Tag side = m.path[2];
    return Prepend({kRight, side, Thread(n / 2)}, Strip(m, 3));
  });
}

Strategy SeelyBackward(const Game& a, const Game& b, int k) {
  Game g = Lollipop(Tensor(Bang(a, k), Bang(b, k)), Bang(With(a, b), k));
  return StrategyFromFunction(g, [](const Move& m) -> std::optional<Move> {
    if (m.path.front() == kRight) {
      Tag thread = m.path[1], side = m.path[2];
      return Prepend({kLeft, side, thread}, Strip(m, 3));
    }
    Tag side = m.path[1], thread = m.path[2];
    return Prepend({kRight, thread, side}, Strip(m, 3));
  });
}

Strategy SeelyUnit(int k) { return EmptyStrategy(Lollipop(Bang(Unit(), k), Unit())); }

Strategy Pairing(const Strategy& f, const Strategy& g) {
  const GameNode& fg = Root(f.game());
  const GameNode& gg = Root(g.game());
  if (fg.kind != GameKind::kLollipop || gg.kind != GameKind::kLollipop ||
      !SameShape(fg.left, gg.left)) {
    throw Error(ErrorCode::kMismatchedGames, "pairing needs a common domain");
  }
  Game game = Lollipop(fg.left, With(fg.right, gg.right));
  return ExploreImpl(
      game,
      [&](const Play& s) -> std::optional<Move> {
        Tag side = s.front().path[1];
        Play local;
        for (const Move& m : s)
          local.push_back(m.path[0] == kLeft ? m : Prepend({kRight}, Strip(m, 2)));
        auto r = AskActual(side == kLeft ? f : g, local);
        if (!r) return std::nullopt;
        if (r->path[0] == kLeft) return r;
        return Prepend({kRight, side}, Strip(*r, 1));
      },
      Strictness::kLenient, false, true);
}

Strategy Projection(const Game& a, const Game& b, int which) {
  Tag side = which == 1 ? kLeft : kRight;
  return StrategyFromFunction(Lollipop(With(a, b), which == 1 ? a : b),
                              [side](const Move& m) -> std::optional<Move> {
                                if (m.path.front() == kRight) return Prepend({kLeft, side}, Strip(m, 1));
                                return Prepend({kRight}, Strip(m, 2));
                              });
}

Strategy Promote(const Strategy& f, int k, bool column_major) {
  const GameNode& fg = Root(f.game());
  if (fg.kind != GameKind::kLollipop || Root(fg.left).kind != GameKind::kBang) {
    throw Error(ErrorCode::kMismatchedGames, "promotion needs !A -o B");
  }
  const GameNode& dom = Root(fg.left);
  int inner = dom.bound;
  Game g = Lollipop(Bang(dom.left, k * inner), Bang(fg.right, k));
  auto pair = [=](int i, int l) { return column_major ? l * k + i : i * inner + l; };
  auto owner = [=](int n) { return column_major ? n % k : n / inner; };
  auto local_of = [=](int n) { return column_major ? n / k : n % inner; };
  return Strategy::Explore(g, [&, pair, owner, local_of](const Play& s) -> std::optional<Move> {
    const Move& last = s.back();
    int copy = last.path[0] == kRight ? ThreadIndex(last.path[1]) : owner(ThreadIndex(last.path[1]));
    Play local;
    for (const Move& m : s) {
      if (m.path[0] == kRight && ThreadIndex(m.path[1]) == copy) {
        local.push_back(Prepend({kRight}, Strip(m, 2)));
      } else if (m.path[0] == kLeft && owner(ThreadIndex(m.path[1])) == copy) {
        local.push_back(Prepend({kLeft, Thread(local_of(ThreadIndex(m.path[1])))}, Strip(m, 2)));
      }
    }
    auto r = AskActual(f, local);
    if (!r) return std::nullopt;
    if (r->path[0] == kRight) return Prepend({kRight, Thread(copy)}, Strip(*r, 1));
    return Prepend({kLeft, Thread(pair(copy, ThreadIndex(r->path[1])))}, Strip(*r, 2));
  });
}

Game Curried(std::span<const Game> args, const Game& result, int k) {
  Game g = result;
  for (auto it = args.rbegin(); it != args.rend(); ++it) g = Arrow(*it, g, k);
  return g;
}

CurriedShape Uncurry(const Game& g0, int n) {
  CurriedShape shape;
  Game g = g0;
  for (int i = 0; i < n; ++i) {
    const GameNode& node = Root(g);
    if (node.kind != GameKind::kLollipop || Root(node.left).kind != GameKind::kBang) {
      throw Error(ErrorCode::kMismatchedGames, "expected " + std::to_string(n) + " arrows in " + PrintGame(g0));
    }
    const GameNode& bang = Root(node.left);
    shape.args.push_back(bang.left);
    shape.bounds.push_back(bang.bound);
    g = node.right;
  }
  shape.result = g;
  return shape;
}

Strategy Substitute(const Game& result_game, int n, std::span<const Strategy> fs,
                    const Strategy& g, const Limits& limits) {
  const int m = static_cast<int>(fs.size());
  CurriedShape rshape = Uncurry(result_game, n);
  CurriedShape gshape = Uncurry(g.game(), m);
  if (!SameShape(rshape.result, gshape.result, true)) {
    throw Error(ErrorCode::kMismatchedGames, "substitution result type differs from g's codomain");
  }
  for (int j = 0; j < m; ++j) {
    CurriedShape fshape = Uncurry(fs[j].game(), n);
    if (!SameShape(fshape.result, gshape.args[j], true)) {
      throw Error(ErrorCode::kMismatchedGames, "argument " + std::to_string(j) + " has the wrong type");
    }
  }

  enum Kind { kX, kY, kZ };
  struct Event {
    Kind kind;
    int j = 0, i = 0;        // g's thread i of !Y_j (kY), or owner copy (kX)
    int k = 0, thread = 0;   // X_k and global thread (kX)
    int local = 0;           // copy-local thread (kX)
    Move inner;
  };

  auto respond = [&, n, m](const Play& s) -> std::optional<Move> {
    std::vector<Event> events;
    std::map<std::pair<int, int>, const Event*> unused;
    auto rights = [](int count) { return std::vector<Tag>(count, kRight); };
    auto g_play = [&]() {
      Play p;
      for (const Event& e : events) {
        if (e.kind == kY) {
          auto path = rights(e.j);
          path.push_back(kLeft);
          path.push_back(Thread(e.i));
          p.push_back(Prepend(path, e.inner));
        } else if (e.kind == kZ) {
          p.push_back(Prepend(rights(m), e.inner));
        }
      }
      return p;
    };
    auto copy_play = [&](int j, int i) {
      Play p;
      for (const Event& e : events) {
        if (e.j != j || e.i != i) continue;
        if (e.kind == kY) {
          p.push_back(Prepend(rights(n), e.inner));
        } else if (e.kind == kX) {
          auto path = rights(e.k);
          path.push_back(kLeft);
          path.push_back(Thread(e.local));
          p.push_back(Prepend(path, e.inner));
        }
      }
      return p;
    };
    auto owner_of = [&](int k, int thread) -> const Event* {
      for (const Event& e : events)
        if (e.kind == kX && e.k == k && e.thread == thread) return &e;
      return nullptr;
    };
    auto global_thread = [&](int j, int i, int k, int local) {
      for (const Event& e : events)
        if (e.kind == kX && e.j == j && e.i == i && e.k == k && e.local == local) return e.thread;
      std::set<int> used;
      for (const Event& e : events)
        if (e.kind == kX && e.k == k) used.insert(e.thread);
      int t = 0;
      while (used.count(t)) ++t;
      if (t >= rshape.bounds[k]) {
        throw Error(ErrorCode::kBoundExceeded, "substitution needs thread " + std::to_string(t) +
                                                   " of argument " + std::to_string(k));
      }
      return t;
    };

    std::optional<Move> out;
    for (std::size_t idx = 0; idx < s.size(); idx += 2) {
      const Move& o = s[idx];
      std::size_t r = LeadingRights(o, n);
      // Who to ask next: -1 = g, otherwise (j, i) copy.
      int ask_j = -1, ask_i = -1;
      if (static_cast<int>(r) == n) {
        events.push_back({kZ, -1, -1, 0, 0, 0, Strip(o, n)});
      } else {
        int k = static_cast<int>(r);
        int thread = ThreadIndex(o.path[r + 1]);
        const Event* own = owner_of(k, thread);
        if (!own) throw Error(ErrorCode::kMalformedPlay, "Opponent move in an unopened thread");
        Event e{kX, own->j, own->i, k, thread, own->local, Strip(o, r + 2)};
        ask_j = e.j;
        ask_i = e.i;
        events.push_back(std::move(e));
      }
      std::size_t steps = 0;
      out.reset();
      while (!out) {
        if (++steps > limits.max_interaction) {
          throw Error(ErrorCode::kLivelockDetected, "interaction exceeded bound after " + ToString(s));
        }
        if (ask_j < 0) {
          auto resp = AskActual(g, g_play());
          if (!resp) return std::nullopt;
          std::size_t gr = LeadingRights(*resp, m);
          if (static_cast<int>(gr) == m) {
            events.push_back({kZ, -1, -1, 0, 0, 0, Strip(*resp, m)});
            out = Prepend(rights(n), Strip(*resp, m));
          } else {
            ask_j = static_cast<int>(gr);
            ask_i = ThreadIndex(resp->path[gr + 1]);
            events.push_back({kY, ask_j, ask_i, 0, 0, 0, Strip(*resp, gr + 2)});
          }
        } else {
          auto resp = AskActual(fs[ask_j], copy_play(ask_j, ask_i));
          if (!resp) return std::nullopt;
          std::size_t fr = LeadingRights(*resp, n);
          if (static_cast<int>(fr) == n) {
            events.push_back({kY, ask_j, ask_i, 0, 0, 0, Strip(*resp, n)});
            ask_j = ask_i = -1;
          } else {
            int k = static_cast<int>(fr);
            int local = ThreadIndex(resp->path[fr + 1]);
            int thread = global_thread(ask_j, ask_i, k, local);
            Move inner = Strip(*resp, fr + 2);
            events.push_back({kX, ask_j, ask_i, k, thread, local, inner});
            auto path = rights(k);
            path.push_back(kLeft);
            path.push_back(Thread(thread));
            out = Prepend(path, inner);
          }
        }
      }
      if (idx + 1 < s.size() && *out != s[idx + 1]) {
        throw Error(ErrorCode::kNondeterministicClosure, "substitution replay diverged at " + ToString(s));
      }
    }
    return out;
  };
  return ExploreImpl(result_game, respond, Strictness::kLenient, false, true);
}

Strategy CokleisliCompose(const Strategy& f, const Strategy& g, const Limits& limits) {
  const GameNode& fg = Root(f.game());
  const GameNode& gg = Root(g.game());
  if (fg.kind != GameKind::kLollipop || gg.kind != GameKind::kLollipop) {
    throw Error(ErrorCode::kMismatchedGames, "co-Kleisli composition needs !A -o B and !B -o C");
  }
  Game result = Lollipop(fg.left, gg.right);
  return Substitute(result, 1, std::span<const Strategy>(&f, 1), g, limits);
}

namespace {

using Maps = std::vector<ResponseMap>;

Maps EnumerateFrom(const Game& g, const Play& s, const Limits& limits) {
  Maps result{ResponseMap{}};
  for (const Move& a : LegalOpponentMoves(g, s)) {
    Play sa = s;
    sa.push_back(a);
    sa = CanonicalPlay(sa);
    std::string key = PlayKey(sa);
    Maps options;
    for (const Move& b : LegalPlayerMoves(g, sa)) {
      Play sab = sa;
      sab.push_back(b);
      sab = CanonicalPlay(sab);
      for (ResponseMap& sub : EnumerateFrom(g, sab, limits)) {
        sub[key] = sab.back();
        options.push_back(std::move(sub));
        if (options.size() > limits.max_enum) {
          throw Error(ErrorCode::kExplosionGuard, "too many winning strategies on " + PrintGame(g));
        }
      }
    }
    if (options.empty()) return {};
    if (result.size() * options.size() > limits.max_enum) {
      throw Error(ErrorCode::kExplosionGuard, "too many winning strategies on " + PrintGame(g));
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

namespace {

bool IsAnswer(const Move& m) { return m.base != kQuestionName; }

// Answers first: they close a thread, so the search stays shallow.
std::vector<Move> AnswersFirst(std::vector<Move> moves) {
  std::stable_partition(moves.begin(), moves.end(), IsAnswer);
  return moves;
}

bool Winnable(const Game& g, const Play& s, std::unordered_map<std::string, bool>& memo) {
  std::string key = PlayKey(s);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool ok = true;
  for (const Move& a : LegalOpponentMoves(g, s)) {
    Play sa = s;
    sa.push_back(a);
    sa = CanonicalPlay(sa);
    bool any = false;
    for (const Move& b : AnswersFirst(LegalPlayerMoves(g, sa))) {
      Play sab = sa;
      sab.push_back(b);
      if (Winnable(g, CanonicalPlay(sab), memo)) {
        any = true;
        break;
      }
    }
    if (!any) {
      ok = false;
      break;
    }
  }
  memo[key] = ok;
  return ok;
}

}  // namespace

std::optional<Strategy> SampleWinning(const Game& g, std::mt19937_64& rng, double answer_bias) {
  std::bernoulli_distribution prefer_answers(answer_bias);
  std::unordered_map<std::string, bool> memo;
  if (!Winnable(g, {}, memo)) return std::nullopt;
  ResponseMap r;
  std::vector<Play> stack{Play{}};
  while (!stack.empty()) {
    Play s = std::move(stack.back());
    stack.pop_back();
    for (const Move& a : LegalOpponentMoves(g, s)) {
      Play sa = s;
      sa.push_back(a);
      sa = CanonicalPlay(sa);
      std::vector<Move> options = LegalPlayerMoves(g, sa);
      std::shuffle(options.begin(), options.end(), rng);
      if (answer_bias > 0 && prefer_answers(rng)) std::stable_partition(options.begin(), options.end(), IsAnswer);
      for (const Move& b : options) {
        Play sab = sa;
        sab.push_back(b);
        sab = CanonicalPlay(sab);
        if (Winnable(g, sab, memo)) {
          r[PlayKey(sa)] = sab.back();
          stack.push_back(std::move(sab));
          break;
        }
      }
    }
  }
  return Strategy::FromResponses(g, r);
}

std::vector<Strategy> EnumerateWinning(const Game& g, const Limits& limits) {
  static std::mutex mu;
  static std::unordered_map<const GameNode*, std::pair<Game, std::vector<Strategy>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(g.get()); it != cache.end()) return it->second.second;
  }
  std::vector<Strategy> out;
  for (const ResponseMap& r : EnumerateFrom(g, {}, limits)) {
    out.push_back(Strategy::FromResponses(g, r));
  }
  std::sort(out.begin(), out.end(),
            [](const Strategy& a, const Strategy& b) { return a.key() < b.key(); });
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(g.get(), std::make_pair(g, out));
  return out;
}

}  // namespace dttg
