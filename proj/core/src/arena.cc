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

#include "dttg/arena.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace dttg {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedPlay: return "MalformedPlay";
    case ErrorCode::kMismatchedGames: return "MismatchedGames";
    case ErrorCode::kIllegalResponse: return "IllegalResponse";
    case ErrorCode::kNondeterministicClosure: return "NondeterministicClosure";
    case ErrorCode::kLivelockDetected: return "LivelockDetected";
    case ErrorCode::kBoundExceeded: return "BoundExceeded";
    case ErrorCode::kExplosionGuard: return "ExplosionGuard";
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kDuplicateConstructor: return "DuplicateConstructor";
    case ErrorCode::kIllTypedWitness: return "IllTypedWitness";
    case ErrorCode::kDemoFailed: return "DemoFailed";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kType: return "TypeError";
  }
  return "Error";
}

namespace {

std::string TagString(Tag t) {
  if (t == kLeft) return "L";
  if (t == kRight) return "R";
  return std::to_string(ThreadIndex(t));
}

Game Make(GameNode node) { return std::make_shared<const GameNode>(std::move(node)); }

Game Binary(GameKind kind, Game a, Game b) {
  GameNode n;
  n.kind = kind;
  n.left = std::move(a);
  n.right = std::move(b);
  return Make(std::move(n));
}

}  // namespace

std::string ToString(const Move& m) {
  std::string out;
  for (Tag t : m.path) {
    out += TagString(t);
    out += '.';
  }
  if (!out.empty()) out.back() = ':';
  out += m.base;
  return out;
}

std::string ToString(const Play& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += ToString(s[i]);
  }
  return out + "]";
}

Game Unit() { return Make(GameNode{}); }

Game Flat(std::vector<std::string> answers, std::string label) {
  GameNode n;
  n.kind = GameKind::kFlat;
  n.answer_set = std::unordered_set<std::string>(answers.begin(), answers.end());
  n.answers = std::move(answers);
  n.label = std::move(label);
  return Make(std::move(n));
}

Game Tensor(Game a, Game b) { return Binary(GameKind::kTensor, std::move(a), std::move(b)); }
Game Lollipop(Game a, Game b) { return Binary(GameKind::kLollipop, std::move(a), std::move(b)); }
Game With(Game a, Game b) { return Binary(GameKind::kWith, std::move(a), std::move(b)); }

Game Bang(Game a, int bound) {
  if (bound < 1) throw Error(ErrorCode::kBoundExceeded, "bang bound must be positive");
  GameNode n;
  n.kind = GameKind::kBang;
  n.left = std::move(a);
  n.bound = bound;
  return Make(std::move(n));
}

Game Arrow(Game a, Game b, int bound) { return Lollipop(Bang(std::move(a), bound), std::move(b)); }

Game Boolean() { return Flat({"tt", "ff"}, "Bool"); }

const GameNode& Root(const Game& g) {
  const GameNode* n = g.get();
  while (n->kind == GameKind::kSubgame || n->kind == GameKind::kCarved) n = n->left.get();
  return *n;
}

Game Total(const Game& g) {
  switch (g->kind) {
    case GameKind::kSubgame:
    case GameKind::kCarved:
      return Total(g->left);
    case GameKind::kTensor:
    case GameKind::kLollipop:
    case GameKind::kWith: {
      Game l = Total(g->left), r = Total(g->right);
      if (l == g->left && r == g->right) return g;
      return Binary(g->kind, l, r);
    }
    case GameKind::kBang: {
      Game inner = Total(g->left);
      if (inner == g->left) return g;
      return Bang(inner, g->bound);
    }
    default:
      return g;
  }
}

std::optional<MoveLabel> Label(const Game& g, const Move& m) {
  const GameNode* n = &Root(g);
  bool flipped = false;
  for (Tag t : m.path) {
    switch (n->kind) {
      case GameKind::kTensor:
      case GameKind::kWith:
      case GameKind::kLollipop:
        if (t == kLeft) {
          if (n->kind == GameKind::kLollipop) flipped = !flipped;
          n = &Root(n->left);
        } else if (t == kRight) {
          n = &Root(n->right);
        } else {
          return std::nullopt;
        }
        break;
      case GameKind::kBang:
        if (!IsThread(t) || ThreadIndex(t) >= n->bound) return std::nullopt;
        n = &Root(n->left);
        break;
      default:
        return std::nullopt;
    }
  }
  if (n->kind != GameKind::kFlat) return std::nullopt;
  MoveLabel label;
  if (m.base == kQuestionName) {
    label = {Polarity::kO, MoveKind::kQuestion};
  } else if (n->answer_set.count(m.base)) {
    label = {Polarity::kP, MoveKind::kAnswer};
  } else {
    return std::nullopt;
  }
  if (flipped) label.polarity = Opposite(label.polarity);
  return label;
}

bool HasMove(const Game& g, const Move& m) { return Label(g, m).has_value(); }

namespace {

void CollectMoves(const GameNode& n, std::vector<Tag>& prefix, std::vector<Move>& out) {
  switch (n.kind) {
    case GameKind::kUnit:
      return;
    case GameKind::kFlat:
      out.push_back({prefix, std::string(kQuestionName)});
      for (const auto& a : n.answers) out.push_back({prefix, a});
      return;
    case GameKind::kTensor:
    case GameKind::kLollipop:
    case GameKind::kWith:
      prefix.push_back(kLeft);
      CollectMoves(Root(n.left), prefix, out);
      prefix.back() = kRight;
      CollectMoves(Root(n.right), prefix, out);
      prefix.pop_back();
      return;
    case GameKind::kBang:
      for (int i = 0; i < n.bound; ++i) {
        prefix.push_back(Thread(i));
        CollectMoves(Root(n.left), prefix, out);
        prefix.pop_back();
      }
      return;
    default:
      return;
  }
}

// Labels of every move, or nullopt if some move is foreign.
std::optional<std::vector<MoveLabel>> Labels(const Game& g, const Play& s) {
  std::vector<MoveLabel> labels;
  labels.reserve(s.size());
  for (const Move& m : s) {
    auto l = Label(g, m);
    if (!l) return std::nullopt;
    labels.push_back(*l);
  }
  return labels;
}

std::optional<std::vector<int>> JustifiersFromLabels(const std::vector<MoveLabel>& labels) {
  std::vector<int> just(labels.size(), -1);
  std::vector<int> open;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].kind == MoveKind::kQuestion) {
      open.push_back(static_cast<int>(i));
    } else {
      if (open.empty()) return std::nullopt;
      just[i] = open.back();
      open.pop_back();
    }
  }
  return just;
}

bool SameFirstTag(const Play& s, const std::vector<int>& just) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (just[i] >= 0 && s[just[i]].path.front() != s[i].path.front()) return false;
  }
  return true;
}

bool IsPlayImpl(const Game& g, const Play& s, bool only_last);

bool ComponentsLegal(const GameNode& n, const Play& s, const std::vector<int>& just) {
  switch (n.kind) {
    case GameKind::kUnit:
      return s.empty();
    case GameKind::kFlat:
      return s.size() <= 2 && std::all_of(s.begin(), s.end(),
                                          [](const Move& m) { return m.path.empty(); });
    case GameKind::kTensor:
    case GameKind::kLollipop:
      return SameFirstTag(s, just) && IsPlayImpl(n.left, Restrict(s, kLeft), false) &&
             IsPlayImpl(n.right, Restrict(s, kRight), false);
    case GameKind::kWith: {
      if (s.empty()) return true;
      Tag side = s.front().path.front();
      for (const Move& m : s)
        if (m.path.front() != side) return false;
      return IsPlayImpl(side == kLeft ? n.left : n.right, Restrict(s, side), false);
    }
    case GameKind::kBang: {
      if (!SameFirstTag(s, just)) return false;
      std::set<Tag> threads;
      for (const Move& m : s) threads.insert(m.path.front());
      for (Tag t : threads)
        if (!IsPlayImpl(n.left, Restrict(s, t), false)) return false;
      return true;
    }
    default:
      return false;
  }
}

bool IsPlayImpl(const Game& g, const Play& s, bool only_last) {
  if (g->kind == GameKind::kSubgame) {
    return IsPlayImpl(g->left, s, false) && g->plays->count(CanonicalKey(s)) > 0;
  }
  if (g->kind == GameKind::kCarved) {
    if (!IsPlayImpl(g->left, s, false)) return false;
    if (only_last) return s.empty() || g->constraint->AdmitsLast(s);
    Play prefix;
    prefix.reserve(s.size());
    for (const Move& m : s) {
      prefix.push_back(m);
      if (!g->constraint->AdmitsLast(prefix)) return false;
    }
    return true;
  }
  auto labels = Labels(g, s);
  if (!labels) return false;
  {
    std::set<Move> seen(s.begin(), s.end());
    if (seen.size() != s.size()) return false;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    Polarity expected = (i % 2 == 0) ? Polarity::kO : Polarity::kP;
    if ((*labels)[i].polarity != expected) return false;
  }
  auto just = JustifiersFromLabels(*labels);
  if (!just) return false;
  return ComponentsLegal(*g, s, *just);
}

}  // namespace

std::vector<Move> Moves(const Game& g) {
  std::vector<Move> out;
  std::vector<Tag> prefix;
  CollectMoves(Root(g), prefix, out);
  return out;
}

std::optional<std::vector<int>> Justifiers(const Game& g, const Play& s) {
  auto labels = Labels(g, s);
  if (!labels) throw Error(ErrorCode::kMalformedPlay, "foreign move in " + ToString(s));
  return JustifiersFromLabels(*labels);
}

bool IsPlay(const Game& g, const Play& s) { return IsPlayImpl(g, s, false); }
bool ExtendsPlay(const Game& g, const Play& s) { return IsPlayImpl(g, s, true); }

Play Restrict(const Play& s, Tag tag) {
  Play out;
  for (const Move& m : s) {
    if (!m.path.empty() && m.path.front() == tag) {
      out.push_back({std::vector<Tag>(m.path.begin() + 1, m.path.end()), m.base});
    }
  }
  return out;
}

Play RestrictPath(const Play& s, const std::vector<Tag>& prefix) {
  Play out;
  for (const Move& m : s) {
    if (m.path.size() >= prefix.size() &&
        std::equal(prefix.begin(), prefix.end(), m.path.begin())) {
      out.push_back({std::vector<Tag>(m.path.begin() + prefix.size(), m.path.end()), m.base});
    }
  }
  return out;
}

Canonical Canonicalize(const Play& s) {
  Canonical c;
  std::map<std::vector<Tag>, std::map<Tag, Tag>> to_canonical;  // keyed by canonical prefix
  c.play.reserve(s.size());
  for (const Move& m : s) {
    Move out{{}, m.base};
    out.path.reserve(m.path.size());
    std::vector<Tag> actual_prefix;
    for (Tag t : m.path) {
      if (IsThread(t)) {
        auto& table = to_canonical[out.path];
        auto it = table.find(t);
        Tag ct;
        if (it == table.end()) {
          ct = Thread(static_cast<int>(table.size()));
          table.emplace(t, ct);
          c.to_actual[out.path][ct] = t;
          c.used[actual_prefix].push_back(t);
        } else {
          ct = it->second;
        }
        out.path.push_back(ct);
      } else {
        out.path.push_back(t);
      }
      actual_prefix.push_back(t);
    }
    c.play.push_back(std::move(out));
  }
  return c;
}

Play CanonicalPlay(const Play& s) { return Canonicalize(s).play; }

std::string PlayKey(const Play& canonical) {
  std::string key;
  for (const Move& m : canonical) {
    for (Tag t : m.path) {
      key += std::to_string(t);
      key += '.';
    }
    key += m.base;
    key += '|';
  }
  return key;
}

Move Decanonicalize(const Game& g, const Canonical& c, const Move& cm) {
  Move out{{}, cm.base};
  std::vector<Tag> canonical_prefix;
  const GameNode* n = &Root(g);
  for (Tag t : cm.path) {
    if (IsThread(t)) {
      if (n->kind != GameKind::kBang) throw Error(ErrorCode::kMalformedPlay, "thread tag outside bang");
      Tag actual = 0;
      bool found = false;
      if (auto it = c.to_actual.find(canonical_prefix); it != c.to_actual.end()) {
        if (auto jt = it->second.find(t); jt != it->second.end()) {
          actual = jt->second;
          found = true;
        }
      }
      if (!found) {
        std::vector<Tag> used;
        if (auto it = c.used.find(out.path); it != c.used.end()) used = it->second;
        int i = 0;
        while (std::find(used.begin(), used.end(), Thread(i)) != used.end()) ++i;
        if (i >= n->bound) {
          throw Error(ErrorCode::kBoundExceeded,
                      "needs thread " + std::to_string(i) + " under !" + std::to_string(n->bound));
        }
        actual = Thread(i);
      }
      out.path.push_back(actual);
      n = &Root(n->left);
    } else {
      out.path.push_back(t);
      if (n->kind == GameKind::kBang || n->kind == GameKind::kFlat || n->kind == GameKind::kUnit)
        throw Error(ErrorCode::kMalformedPlay, "component tag outside connective");
      n = &Root(t == kLeft ? n->left : n->right);
    }
    canonical_prefix.push_back(t);
  }
  return out;
}

bool EquivPlays(const Game& g, const Play& s, const Play& t) {
  if (!IsPlay(g, s) || !IsPlay(g, t)) {
    throw Error(ErrorCode::kMalformedPlay, "equiv_plays needs legal plays");
  }
  return CanonicalPlay(s) == CanonicalPlay(t);
}

std::vector<Play> EnumeratePlays(const Game& g, std::size_t limit) {
  std::vector<Move> moves = Moves(g);
  std::vector<Play> out;
  std::vector<Play> stack{Play{}};
  std::unordered_set<std::string> seen;
  while (!stack.empty()) {
    Play s = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(CanonicalKey(s)).second) continue;
    out.push_back(s);
    if (out.size() > limit) throw Error(ErrorCode::kExplosionGuard, "play enumeration limit");
    for (const Move& m : moves) {
      if (std::find(s.begin(), s.end(), m) != s.end()) continue;
      Play t = s;
      t.push_back(m);
      if (ExtendsPlay(g, t)) stack.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SameShape(const Game& a0, const Game& b0, bool ignore_bounds) {
  const GameNode& a = Root(a0);
  const GameNode& b = Root(b0);
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case GameKind::kUnit:
      return true;
    case GameKind::kFlat:
      return a.answer_set == b.answer_set;
    case GameKind::kBang:
      return (ignore_bounds || a.bound == b.bound) && SameShape(a.left, b.left, ignore_bounds);
    default:
      return SameShape(a.left, b.left, ignore_bounds) && SameShape(a.right, b.right, ignore_bounds);
  }
}

Game ExplicitSubgame(Game total, const std::vector<Play>& plays) {
  auto keys = std::make_shared<std::unordered_set<std::string>>();
  keys->insert(PlayKey({}));
  for (const Play& s : plays) {
    if (!IsPlay(total, s)) {
      throw Error(ErrorCode::kMalformedPlay, "subgame play " + ToString(s) + " is not legal");
    }
    Play c = CanonicalPlay(s);
    for (std::size_t n = 1; n <= c.size(); ++n) keys->insert(PlayKey(Play(c.begin(), c.begin() + n)));
  }
  GameNode n;
  n.kind = GameKind::kSubgame;
  n.left = Total(total);
  n.plays = std::move(keys);
  return Make(std::move(n));
}

Game CarvedSubgame(Game total, std::shared_ptr<const PlayConstraint> c, std::string label) {
  GameNode n;
  n.kind = GameKind::kCarved;
  n.left = std::move(total);
  n.constraint = std::move(c);
  n.label = std::move(label);
  return Make(std::move(n));
}

bool SubgameLeq(const Game& a, const Game& b) {
  if (!SameShape(Total(a), Total(b))) {
    throw Error(ErrorCode::kMismatchedGames, "subgame_leq needs a common total game");
  }
  for (const Play& s : EnumeratePlays(a))
    if (!IsPlay(b, s)) return false;
  return true;
}

std::pair<Game, Game> MeetJoin(const Game& a, const Game& b) {
  if (!SameShape(Total(a), Total(b))) {
    throw Error(ErrorCode::kMismatchedGames, "meet/join needs a common total game");
  }
  std::vector<Play> pa = EnumeratePlays(a), pb = EnumeratePlays(b);
  std::unordered_set<std::string> kb;
  for (const Play& s : pb) kb.insert(CanonicalKey(s));
  std::vector<Play> meet, join = pb;
  for (const Play& s : pa) {
    if (kb.count(CanonicalKey(s))) meet.push_back(s);
    else join.push_back(s);
  }
  Game total = Total(a);
  return {ExplicitSubgame(total, meet), ExplicitSubgame(total, join)};
}

namespace {

class GameParser {
 public:
  explicit GameParser(std::string_view text) : text_(text) {}

  Game Parse() {
    Game g = ParseExpr();
    Skip();
    if (pos_ != text_.size()) Fail("trailing input");
    return g;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) {
    throw Error(ErrorCode::kParse, "game notation at offset " + std::to_string(pos_) + ": " + what);
  }

  void Skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool Eat(std::string_view tok) {
    Skip();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  std::string Ident() {
    Skip();
    if (pos_ < text_.size() && text_[pos_] == '"') {
      std::string out;
      for (++pos_; pos_ < text_.size() && text_[pos_] != '"'; ++pos_) {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        out += text_[pos_];
      }
      if (pos_ == text_.size()) Fail("unterminated quoted name");
      ++pos_;
      return out;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) Fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Game ParseExpr() {
    Skip();
    if (Eat("flat{")) {
      std::vector<std::string> names;
      if (!Eat("}")) {
        do names.push_back(Ident());
        while (Eat(","));
        if (!Eat("}")) Fail("expected '}'");
      }
      return Flat(std::move(names));
    }
    if (Eat("!")) {
      Skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) Fail("expected bang bound");
      int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
      return Bang(ParseExpr(), k);
    }
    if (Eat("(")) {
      Game a = ParseExpr();
      Game g;
      if (Eat("-o")) g = Lollipop(a, ParseExpr());
      else if (Eat("*")) g = Tensor(a, ParseExpr());
      else if (Eat("&")) g = With(a, ParseExpr());
      else Fail("expected '*', '-o' or '&'");
      if (!Eat(")")) Fail("expected ')'");
      return g;
    }
    if (Eat("I")) return Unit();
    Fail("expected a game");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Game ParseGame(std::string_view text) { return GameParser(text).Parse(); }

namespace {

std::string QuoteAnswer(const std::string& a) {
  bool plain = !a.empty() && std::all_of(a.begin(), a.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
  if (plain) return a;
  std::string out = "\"";
  for (char c : a) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string PrintGame(const Game& g) {
  switch (g->kind) {
    case GameKind::kUnit:
      return "I";
    case GameKind::kFlat: {
      std::string out = "flat{";
      for (std::size_t i = 0; i < g->answers.size(); ++i) {
        if (i) out += ',';
        out += QuoteAnswer(g->answers[i]);
      }
      return out + "}";
    }
    case GameKind::kTensor:
      return "(" + PrintGame(g->left) + " * " + PrintGame(g->right) + ")";
    case GameKind::kLollipop:
      return "(" + PrintGame(g->left) + " -o " + PrintGame(g->right) + ")";
    case GameKind::kWith:
      return "(" + PrintGame(g->left) + " & " + PrintGame(g->right) + ")";
    case GameKind::kBang:
      return "!" + std::to_string(g->bound) + " " + PrintGame(g->left);
    case GameKind::kSubgame:
      return "sub[" + std::to_string(g->plays->size()) + "](" + PrintGame(g->left) + ")";
    case GameKind::kCarved:
      return "carved[" + (g->label.empty() ? g->constraint->Describe() : g->label) + "](" +
             PrintGame(g->left) + ")";
  }
  return "?";
}

}  // namespace dttg
