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

// Finite AJM arenas: flat games closed under I, tensor, linear implication,
// with and a bounded exponential, plus explicit and predicate-carved
// subgames of a fixed total game.

#ifndef DTTG_ARENA_H_
#define DTTG_ARENA_H_

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dttg/error.h"

namespace dttg {

enum class Polarity : std::uint8_t { kO, kP };
enum class MoveKind : std::uint8_t { kQuestion, kAnswer };

inline Polarity Opposite(Polarity p) {
  return p == Polarity::kO ? Polarity::kP : Polarity::kO;
}

struct MoveLabel {
  Polarity polarity;
  MoveKind kind;
  bool operator==(const MoveLabel&) const = default;
};

// One step of a move's address inside a compound game. Left/right select a
// component of a binary connective; any other value is a thread index under
// a bang.
using Tag = std::uint16_t;
inline constexpr Tag kLeft = 0;
inline constexpr Tag kRight = 1;
inline constexpr Tag Thread(int i) { return static_cast<Tag>(i + 2); }
inline constexpr bool IsThread(Tag t) { return t >= 2; }
inline constexpr int ThreadIndex(Tag t) { return static_cast<int>(t) - 2; }

inline constexpr std::string_view kQuestionName = "*";

struct Move {
  std::vector<Tag> path;
  std::string base;

  auto operator<=>(const Move&) const = default;
  bool operator==(const Move&) const = default;
};

using Play = std::vector<Move>;

std::string ToString(const Move& m);
std::string ToString(const Play& s);

enum class GameKind { kUnit, kFlat, kTensor, kLollipop, kWith, kBang, kSubgame, kCarved };

class GameNode;
using Game = std::shared_ptr<const GameNode>;

// Extra legality imposed by a carved subgame. `Admits` sees a play already
// known to be legal in the total game and in the carved game up to its
// second-to-last move, and decides the last step.
class PlayConstraint {
 public:
  virtual ~PlayConstraint() = default;
  virtual bool AdmitsLast(const Play& s) const = 0;
  virtual std::string Describe() const = 0;
};

class GameNode {
 public:
  GameKind kind = GameKind::kUnit;
  std::vector<std::string> answers;        // kFlat
  std::unordered_set<std::string> answer_set;
  Game left;                               // binary, kBang inner, subgame total
  Game right;                              // binary
  int bound = 0;                           // kBang
  std::shared_ptr<const std::unordered_set<std::string>> plays;  // kSubgame
  std::shared_ptr<const PlayConstraint> constraint;              // kCarved
  std::string label;                       // optional display name
};

// Constructors.
Game Unit();
Game Flat(std::vector<std::string> answers, std::string label = "");
Game Tensor(Game a, Game b);
Game Lollipop(Game a, Game b);
Game With(Game a, Game b);
Game Bang(Game a, int bound);
// A => B, i.e. !A -o B.
Game Arrow(Game a, Game b, int bound);
Game Boolean();

// Subgame of `total` given by an enumerated, prefix-closed set of plays.
// Plays are stored by canonical key, so the set is ≈-saturated.
Game ExplicitSubgame(Game total, const std::vector<Play>& plays);
Game CarvedSubgame(Game total, std::shared_ptr<const PlayConstraint> c,
                   std::string label = "");

// The total game: every subgame wrapper removed, recursively.
Game Total(const Game& g);
// Strips subgame wrappers at the root only.
const GameNode& Root(const Game& g);

std::optional<MoveLabel> Label(const Game& g, const Move& m);
bool HasMove(const Game& g, const Move& m);
std::vector<Move> Moves(const Game& g);

// Justifier of each position (-1 for questions); nullopt if some answer has
// no open question.
std::optional<std::vector<int>> Justifiers(const Game& g, const Play& s);

bool IsPlay(const Game& g, const Play& s);
// Assumes `s` minus its last move is a play of `g`.
bool ExtendsPlay(const Game& g, const Play& s);

// Moves of component `tag` with the tag stripped.
Play Restrict(const Play& s, Tag tag);
Play RestrictPath(const Play& s, const std::vector<Tag>& prefix);

// Canonical representative of the ≈-class: thread indices of every bang
// instance renumbered in order of first occurrence.
struct Canonical {
  Play play;
  // For each canonical instance prefix: canonical index -> actual index.
  std::map<std::vector<Tag>, std::map<Tag, Tag>> to_actual;
  // For each actual instance prefix: used actual indices.
  std::map<std::vector<Tag>, std::vector<Tag>> used;
};
Canonical Canonicalize(const Play& s);
Play CanonicalPlay(const Play& s);
std::string PlayKey(const Play& canonical);
inline std::string CanonicalKey(const Play& s) { return PlayKey(CanonicalPlay(s)); }

// Canonical form of `s` followed by `m` where `m` is given relative to the
// canonical numbering of `s`. Fresh threads take the least unused actual
// index; throws BoundExceeded if that index does not fit the game.
Move Decanonicalize(const Game& g, const Canonical& c, const Move& canonical_move);

bool EquivPlays(const Game& g, const Play& s, const Play& t);

// All plays of a finite game (prefix-closed), bounded by `limit`.
std::vector<Play> EnumeratePlays(const Game& g, std::size_t limit = 2000000);

// Structural equality of the total games; optionally ignoring bang bounds.
bool SameShape(const Game& a, const Game& b, bool ignore_bounds = false);

bool SubgameLeq(const Game& a, const Game& b);
std::pair<Game, Game> MeetJoin(const Game& a, const Game& b);

// Textual notation: I, flat{tt,ff}, (g * h), (g -o h), (g & h), !k g.
Game ParseGame(std::string_view text);
std::string PrintGame(const Game& g);

}  // namespace dttg

#endif  // DTTG_ARENA_H_
