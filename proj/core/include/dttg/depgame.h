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

// Games with dependency: monotone tables over base strategies, the observed
// behaviour of a bang play, Π-games, O-saturation and context games.

#ifndef DTTG_DEPGAME_H_
#define DTTG_DEPGAME_H_

#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dttg/arena.h"
#include "dttg/strategy.h"

namespace dttg {

class DependentGame {
 public:
  using Fibre = std::function<Game(std::span<const Strategy>)>;
  struct Entry {
    std::vector<Strategy> key;
    Game game;
  };

  DependentGame() = default;

  // A game that ignores its parameters.
  static DependentGame Constant(Game g, std::vector<Game> base = {});
  // Monotone finite table. Validates the ⊥ entry, images below `total`,
  // duplicate keys and monotonicity.
  static DependentGame FromTable(Game total, std::vector<Game> base, std::vector<Entry> table,
                                 std::string name = "");
  static DependentGame FromFunction(Game total, std::vector<Game> base, Fibre fibre,
                                    std::string name = "");

  const Game& total() const;
  // Total games of the context this game depends on.
  const std::vector<Game>& base() const;
  int arity() const { return static_cast<int>(base().size()); }
  const std::string& name() const;
  // Null unless built from a table.
  const std::vector<Entry>* table() const;

  // Fibre at the given parameters (memoized). Missing trailing parameters
  // are ⊥.
  Game At(std::span<const Strategy> args) const;
  Game At(std::initializer_list<Strategy> args) const {
    return At(std::span<const Strategy>(args.begin(), args.size()));
  }
  Game Bottom() const { return At(std::span<const Strategy>()); }
  Strategy BottomArg(int i) const { return EmptyStrategy(base()[i]); }

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// Join of the table images over keys pointwise below `args`.
Game ApplyDep(const DependentGame& b, std::span<const Strategy> args);

// Table equality after sorting keys.
bool DependentGamesEqual(const DependentGame& a, const DependentGame& b);

class ContextGame {
 public:
  ContextGame() = default;
  explicit ContextGame(std::vector<DependentGame> entries);

  const std::vector<DependentGame>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const DependentGame& operator[](std::size_t i) const { return entries_[i]; }
  std::vector<Game> totals() const;
  // Appends an entry whose base must be this context.
  ContextGame Extend(const DependentGame& x) const;
  ContextGame Prefix(std::size_t n) const;

 private:
  std::vector<DependentGame> entries_;
};

// An ≈-closed set of even plays of a base game.
struct Observation {
  std::vector<Play> plays;
  std::set<std::string> keys;

  bool empty() const { return keys.empty(); }
  std::string Key() const;
  void Add(const Play& p);
  // Every observed play belongs to `s` up to ≈.
  bool Within(const Strategy& s) const;
};

// s̄ for a play `s` of a bang game: the non-empty even prefixes of each
// thread's play.
Observation Observed(const Play& s);

// Winning strategies of `a` containing `obs` (constrained search, memoized).
std::vector<Strategy> ConsistentExtensions(const Game& a, const Observation& obs,
                                           const Limits& limits = {});

// Π_{X_n} X_{n+1} as a game depending on the first n-1 parameters. O-moves
// need some consistent τ; P-moves must be safe for every consistent τ.
DependentGame PiGame(const DependentGame& xn, const DependentGame& xn1, int k,
                     const Limits& limits = {});

// Osat(Π_A B) for a closed A.
Game Osat(const DependentGame& a, const DependentGame& b, int k, const Limits& limits = {});
// Osat(A(⊥), ⌣A): free O-moves, P-moves kept inside A(⊥) whenever O has.
Game Saturate(const Game& sub);
// Osat(Π_{X_1}...Π_{X_n} Y) carved out of ⌣X_1 => ... => ⌣X_n => ⌣Y.
Game MultiPi(const ContextGame& ctx, const DependentGame& y, int k, const Limits& limits = {});
// The same with fixed leading parameters: ctx entries i >= params.size()
// are quantified, the first params.size() are instantiated.
Game MultiPiAt(const ContextGame& ctx, std::span<const Strategy> params,
               const DependentGame& y, int k, bool exists_o, const Limits& limits = {});

// Strategy whose even plays are exactly the prefix closure of `plays`.
Strategy StrategyFromPlays(const Game& g, const std::vector<Play>& plays,
                           Strictness mode = Strictness::kStrict);

}  // namespace dttg

#endif  // DTTG_DEPGAME_H_
