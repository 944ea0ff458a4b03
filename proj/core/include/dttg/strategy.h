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

// Strategies as deterministic response maps on ≈-canonical positions, and
// the operations of the linear and co-Kleisli categories of games.

#ifndef DTTG_STRATEGY_H_
#define DTTG_STRATEGY_H_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dttg/arena.h"
#include "dttg/error.h"

namespace dttg {

// Canonical odd position key -> Player response, in the coordinates of the
// canonical position.
using ResponseMap = std::map<std::string, Move>;

// Partial function on moves: the history-free skeleton of a strategy.
using MoveFunction = std::function<std::optional<Move>(const Move&)>;
// Response as a function of the whole (actual) odd position.
using PositionFunction = std::function<std::optional<Move>(const Play&)>;

enum class Strictness {
  kStrict,   // an illegal response raises IllegalResponse
  kLenient,  // an illegal response leaves the strategy undefined there
};

class Strategy {
 public:
  Strategy() = default;

  const Game& game() const { return game_; }
  const ResponseMap& responses() const { return *responses_; }
  // Canonical even-length plays, sorted.
  const std::vector<Play>& plays() const { return *plays_; }
  const std::set<std::string>& play_keys() const { return *keys_; }
  bool winning() const { return winning_; }
  // Identity of the ≈-saturated play set.
  const std::string& key() const { return *key_; }

  std::optional<Move> Respond(const Play& canonical_odd) const;
  bool Contains(const Play& s) const { return keys_->count(CanonicalKey(s)) > 0; }

  static Strategy Explore(Game g, const PositionFunction& respond,
                          Strictness mode = Strictness::kStrict,
                          bool check_determinacy = false);
  static Strategy FromResponses(Game g, const ResponseMap& responses,
                                Strictness mode = Strictness::kStrict);

 private:
  static Strategy Assemble(Game g, ResponseMap responses, std::vector<Play> plays, bool winning);
  friend Strategy Assembled(Game, ResponseMap, std::vector<Play>, bool);

  Game game_;
  std::shared_ptr<const ResponseMap> responses_ = std::make_shared<ResponseMap>();
  std::shared_ptr<const std::vector<Play>> plays_ = std::make_shared<std::vector<Play>>();
  std::shared_ptr<const std::set<std::string>> keys_ = std::make_shared<std::set<std::string>>();
  std::shared_ptr<const std::string> key_ = std::make_shared<std::string>();
  bool winning_ = false;
};

Strategy StrategyFromFunction(Game g, const MoveFunction& f,
                              Strictness mode = Strictness::kStrict);
// The same skeleton re-explored on another game over the same total game.
Strategy Retype(const Strategy& s, Game g, Strictness mode = Strictness::kLenient);

bool IsWinning(const Game& g, const Strategy& s);
bool StrategiesEqual(const Strategy& a, const Strategy& b);
// Play-set inclusion.
bool StrategyLeq(const Strategy& a, const Strategy& b);

// HF1 and HF2 on the skeleton generated by `f` from the empty play.
bool SkeletonHistoryFree(const Game& g, const MoveFunction& f);

// Everywhere-undefined strategy.
Strategy EmptyStrategy(Game g);
// Answer `answer` to the opening question of a flat game.
Strategy ConstantStrategy(Game flat, const std::string& answer);

Strategy Copycat(const Game& a);

// Linear composition σ;τ of σ on A -o B and τ on B -o C, by parallel
// composition plus hiding.
Strategy Compose(const Strategy& sigma, const Strategy& tau, const Limits& limits = {});

enum class StructuralKind {
  kDer, kDelta, kDiag, kBangFunctor, kSeelyFwd, kSeelyBwd, kPair, kProj1, kProj2
};

// der_A on !k A -o A.
Strategy Dereliction(const Game& a, int k);
// δ_A on !(k*inner) A -o !k !inner A with row-major pairing.
Strategy Digging(const Game& a, int k, int inner, bool column_major = false);
// diag_A on !k A -o A & A (k >= 2).
Strategy Diagonal(const Game& a, int k);
// !σ on !k A -o !k B for σ on A -o B.
Strategy BangFunctor(const Strategy& sigma, int k);
// !(A&B) ≅ !A ⊗ !B. Forward uses threads 2i / 2i+1 on the left.
Strategy SeelyForward(const Game& a, const Game& b, int k);
Strategy SeelyBackward(const Game& a, const Game& b, int k);
// !I ≅ I.
Strategy SeelyUnit(int k);
// <f,g> on X -o A & B for f on X -o A and g on X -o B.
Strategy Pairing(const Strategy& f, const Strategy& g);
Strategy Projection(const Game& a, const Game& b, int which);

// f† on !(k*inner) A -o !k B for f on !inner A -o B, via row-major pairing
// (or column-major, to check that the injection is irrelevant).
Strategy Promote(const Strategy& f, int k, bool column_major = false);

// Curried game X_1 => ... => X_n => Z with every bang bounded by k.
Game Curried(std::span<const Game> args, const Game& result, int k);
// Peels n arrows: returns (X_1..X_n, Z) and the bounds.
struct CurriedShape {
  std::vector<Game> args;
  std::vector<int> bounds;
  Game result;
};
CurriedShape Uncurry(const Game& g, int n);

// Multi-argument co-Kleisli substitution <f_1,...,f_m>†; g. Each f_j lives on
// X_1 => ... => X_n => Y_j and g on Y_1 => ... => Y_m => Z; the result lives
// on `result_game` = X_1 => ... => X_n => Z.
Strategy Substitute(const Game& result_game, int n, std::span<const Strategy> fs,
                    const Strategy& g, const Limits& limits = {});

// f†;g for f on !A -o B and g on !B -o C; result on the game of f's domain
// -o C.
Strategy CokleisliCompose(const Strategy& f, const Strategy& g, const Limits& limits = {});

// Every winning strategy of a finite game, one per ≈-class, in canonical
// order. Throws ExplosionGuard beyond limits.max_enum.
std::vector<Strategy> EnumerateWinning(const Game& g, const Limits& limits = {});

// A uniformly chosen P-move at every position, backtracking out of moves
// that cannot be completed to a winning strategy. Nullopt if none exists.
// With probability `answer_bias` a position tries answers before questions.
std::optional<Strategy> SampleWinning(const Game& g, std::mt19937_64& rng, double answer_bias = 0.0);

// Legal O-moves / P-moves after `s`, one per ≈-class of the extension.
std::vector<Move> LegalOpponentMoves(const Game& g, const Play& s);
std::vector<Move> LegalPlayerMoves(const Game& g, const Play& s);

}  // namespace dttg

#endif  // DTTG_STRATEGY_H_
