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

#include <algorithm>
#include <functional>
#include <cctype>
#include <set>
#include <sstream>

#include "dttg/dtt.h"
#include "dttg/error.h"

namespace dttg::dtt {

ExprPtr MakeVar(int index, std::string name) {
  auto e = std::make_shared<Expr>();
  e->node = Node::kVar;
  e->index = index;
  e->name = std::move(name);
  return e;
}

ExprPtr MakeGlobal(std::string name) {
  auto e = std::make_shared<Expr>();
  e->node = Node::kGlobal;
  e->name = std::move(name);
  return e;
}

ExprPtr MakeNode(Node node, std::vector<ExprPtr> kids, std::vector<std::string> binders) {
  auto e = std::make_shared<Expr>();
  e->node = node;
  e->kids = std::move(kids);
  e->binders = std::move(binders);
  return e;
}

ExprPtr MakeApp(ExprPtr f, ExprPtr a) { return MakeNode(Node::kApp, {std::move(f), std::move(a)}); }

ExprPtr MakeCase(ExprPtr scrutinee, ExprPtr motive, std::vector<std::string> binders,
                 std::vector<Branch> branches) {
  auto e = std::make_shared<Expr>();
  e->node = Node::kCase;
  e->kids = {std::move(scrutinee), std::move(motive)};
  e->binders = std::move(binders);
  e->branches = std::move(branches);
  return e;
}

namespace {

// Number of binders the i-th child of `e` sits under.
int BindersOver(const Expr& e, std::size_t i) {
  switch (e.node) {
    case Node::kPi:
    case Node::kSigma:
    case Node::kLam:
      return i == 1 ? 1 : 0;
    case Node::kJ:
      return i == 0 ? 3 : i == 1 ? 1 : 0;
    case Node::kCase:
      return i == 1 ? static_cast<int>(e.binders.size()) : 0;
    default:
      return 0;
  }
}

}  // namespace

bool AlphaEqual(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->node != b->node) return false;
  if (a->node == Node::kVar) return a->index == b->index;
  if (a->node == Node::kGlobal) return a->name == b->name;
  if (a->kids.size() != b->kids.size() || a->binders.size() != b->binders.size() ||
      a->branches.size() != b->branches.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a->kids.size(); ++i) {
    if (!AlphaEqual(a->kids[i], b->kids[i])) return false;
  }
  for (std::size_t i = 0; i < a->branches.size(); ++i) {
    if (a->branches[i].constructor != b->branches[i].constructor ||
        !AlphaEqual(a->branches[i].body, b->branches[i].body)) {
      return false;
    }
  }
  return true;
}

ExprPtr Shift(const ExprPtr& e, int d, int cutoff) {
  if (!e || d == 0) return e;
  if (e->node == Node::kVar) {
    if (e->index < cutoff) return e;
    auto out = std::make_shared<Expr>(*e);
    out->index += d;
    return out;
  }
  if (e->node == Node::kGlobal) return e;
  auto out = std::make_shared<Expr>(*e);
  for (std::size_t i = 0; i < out->kids.size(); ++i) {
    out->kids[i] = Shift(e->kids[i], d, cutoff + BindersOver(*e, i));
  }
  for (auto& br : out->branches) br.body = Shift(br.body, d, cutoff);
  return out;
}

namespace {

ExprPtr SubstAt(const ExprPtr& e, int depth, const std::vector<ExprPtr>& args) {
  if (!e) return e;
  int k = static_cast<int>(args.size());
  if (e->node == Node::kVar) {
    if (e->index < depth) return e;
    if (e->index - depth < k) return Shift(args[k - 1 - (e->index - depth)], depth);
    auto out = std::make_shared<Expr>(*e);
    out->index -= k;
    return out;
  }
  if (e->node == Node::kGlobal) return e;
  auto out = std::make_shared<Expr>(*e);
  for (std::size_t i = 0; i < out->kids.size(); ++i) {
    out->kids[i] = SubstAt(e->kids[i], depth + BindersOver(*e, i), args);
  }
  for (auto& br : out->branches) br.body = SubstAt(br.body, depth, args);
  return out;
}

}  // namespace

ExprPtr Instantiate(const ExprPtr& body, const std::vector<ExprPtr>& args) { return SubstAt(body, 0, args); }

bool Mentions(const ExprPtr& e, int i) {
  if (!e) return false;
  if (e->node == Node::kVar) return e->index == i;
  for (std::size_t k = 0; k < e->kids.size(); ++k) {
    if (Mentions(e->kids[k], i + BindersOver(*e, k))) return true;
  }
  for (const auto& br : e->branches) {
    if (Mentions(br.body, i)) return true;
  }
  return false;
}

std::size_t Size(const ExprPtr& e) {
  if (!e) return 0;
  std::size_t n = 1;
  for (const auto& k : e->kids) n += Size(k);
  for (const auto& br : e->branches) n += Size(br.body);
  return n;
}

namespace {

enum class Tok { kIdent, kSym, kEnd };

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

const std::set<std::string>& Keywords() {
  static const std::set<std::string> k = {
      "fun", "Pi", "Sigma", "Id", "refl", "fst", "snd", "J", "case", "return", "of",
      "exfalso", "if", "then", "else", "Unit", "def", "family", "data"};
  return k;
}

std::vector<Token> Lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
      ++i;
    }
  };
  static const std::vector<std::string> syms = {
      ":=", "..", "=>", "->", "→", "×", "λ", "Π", "Σ", "(", ")", "{", "}", ",", ";", ":",
      ".", "*", "\\", "|"};
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "--") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Span span{i, i, line, col};
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\'')) {
        ++j;
      }
      std::string text(src.substr(i, j - i));
      advance(j - i);
      span.end = i;
      out.push_back({Tok::kIdent, text, span});
      continue;
    }
    bool matched = false;
    for (const auto& s : syms) {
      if (src.substr(i, s.size()) == s) {
        advance(s.size());
        span.end = i;
        out.push_back({Tok::kSym, s, span});
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw Error(ErrorCode::kParse, std::to_string(line) + ":" + std::to_string(col) +
                                         ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::kEnd, "", Span{i, i, line, col}});
  return out;
}

std::vector<std::string> ExpandRange(const std::string& lo, const std::string& hi, const Span& at) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    return std::make_pair(s.substr(0, k), s.substr(k));
  };
  auto [p1, n1] = split(lo);
  auto [p2, n2] = split(hi);
  if (p1 != p2 || n1.empty() || n2.empty()) {
    throw Error(ErrorCode::kParse, std::to_string(at.line) + ":" + std::to_string(at.col) +
                                       ": malformed constructor range " + lo + ".." + hi);
  }
  long a = std::stol(n1), b = std::stol(n2);
  if (b < a || b - a > 100000) {
    throw Error(ErrorCode::kParse, std::to_string(at.line) + ":" + std::to_string(at.col) +
                                       ": empty constructor range " + lo + ".." + hi);
  }
  std::vector<std::string> out;
  for (long x = a; x <= b; ++x) out.push_back(p1 + std::to_string(x));
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src, std::vector<std::string> scope = {})
      : toks_(Lex(src)), scope_(std::move(scope)) {}

  ExprPtr ParseWholeExpr() {
    ExprPtr e = ParseExpr();
    if (Peek().kind != Tok::kEnd) Fail("unexpected '" + Peek().text + "'");
    return e;
  }

  std::vector<Decl> ParseDecls() {
    std::vector<Decl> out;
    while (Peek().kind != Tok::kEnd) {
      if (IsWord("def")) {
        out.push_back(ParseDef());
      } else if (IsWord("family")) {
        out.push_back(ParseFamily());
      } else if (IsWord("data")) {
        out.push_back(ParseData());
      } else {
        Fail("expected a declaration (def, family or data)");
      }
    }
    return out;
  }

 private:
  const Token& Peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token Next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool IsSym(const std::string& s, std::size_t k = 0) const {
    return Peek(k).kind == Tok::kSym && Peek(k).text == s;
  }
  bool IsWord(const std::string& s) const { return Peek().kind == Tok::kIdent && Peek().text == s; }
  [[noreturn]] void Fail(const std::string& msg) const {
    const Span& s = Peek().span;
    throw Error(ErrorCode::kParse, std::to_string(s.line) + ":" + std::to_string(s.col) + ": " + msg);
  }
  void Expect(const std::string& s) {
    if (!IsSym(s)) Fail("expected '" + s + "'" + (Peek().kind == Tok::kEnd ? " before end of input" : ""));
    Next();
  }
  void ExpectWord(const std::string& s) {
    if (!IsWord(s)) Fail("expected '" + s + "'");
    Next();
  }
  std::string Name() {
    if (Peek().kind != Tok::kIdent || Keywords().count(Peek().text)) Fail("expected a name");
    return Next().text;
  }

  ExprPtr Spanned(ExprPtr e, const Span& from) {
    auto m = std::const_pointer_cast<Expr>(e);
    m->span = from;
    m->span.end = toks_[pos_ > 0 ? pos_ - 1 : 0].span.end;
    return e;
  }

  ExprPtr Lookup(const std::string& name) {
    for (std::size_t k = scope_.size(); k-- > 0;) {
      if (scope_[k] == name) return MakeVar(static_cast<int>(scope_.size() - 1 - k), name);
    }
    return MakeGlobal(name);
  }

  ExprPtr Under(const std::vector<std::string>& names, const std::function<ExprPtr()>& body) {
    for (const auto& n : names) scope_.push_back(n);
    ExprPtr e = body();
    scope_.resize(scope_.size() - names.size());
    return e;
  }

  ExprPtr ParseExpr() {
    Span start = Peek().span;
    if (IsSym("λ") || IsSym("\\") || IsWord("fun")) {
      Next();
      std::string x;
      ExprPtr dom;
      if (IsSym("(")) {
        Next();
        x = Name();
        Expect(":");
        dom = ParseExpr();
        Expect(")");
      } else {
        x = Name();
      }
      if (IsSym("=>")) {
        Next();
      } else {
        Expect(".");
      }
      ExprPtr body = Under({x}, [&] { return ParseExpr(); });
      return Spanned(MakeNode(Node::kLam, {dom, body}, {x}), start);
    }
    if (IsSym("Π") || IsSym("Σ") || IsWord("Pi") || IsWord("Sigma")) {
      bool pi = IsSym("Π") || IsWord("Pi");
      Next();
      Expect("(");
      std::string x = Name();
      Expect(":");
      ExprPtr a = ParseExpr();
      Expect(")");
      Expect(".");
      ExprPtr b = Under({x}, [&] { return ParseExpr(); });
      return Spanned(MakeNode(pi ? Node::kPi : Node::kSigma, {a, b}, {x}), start);
    }
    if (IsWord("if")) {
      Next();
      ExprPtr c = ParseExpr();
      ExpectWord("then");
      ExprPtr t = ParseExpr();
      ExpectWord("else");
      ExprPtr f = ParseExpr();
      return Spanned(MakeCase(c, nullptr, {"y"}, {{"tt", t}, {"ff", f}}), start);
    }
    ExprPtr a = ParseProd();
    if (IsSym("→") || IsSym("->")) {
      Next();
      ExprPtr b = ParseExpr();
      return Spanned(MakeNode(Node::kPi, {a, Shift(b, 1)}, {"_"}), start);
    }
    return a;
  }

  ExprPtr ParseProd() {
    Span start = Peek().span;
    ExprPtr a = ParseApp();
    if (IsSym("×") || IsSym("*")) {
      Next();
      ExprPtr b = ParseProd();
      return Spanned(MakeNode(Node::kSigma, {a, Shift(b, 1)}, {"_"}), start);
    }
    return a;
  }

  bool AtomStart() const {
    if (IsSym("(")) return true;
    if (Peek().kind != Tok::kIdent) return false;
    const std::string& t = Peek().text;
    return !Keywords().count(t) || t == "Unit" || t == "case";
  }

  ExprPtr ParseApp() {
    Span start = Peek().span;
    ExprPtr head;
    if (IsWord("fst") || IsWord("snd") || IsWord("refl")) {
      std::string w = Next().text;
      ExprPtr a = ParseAtom();
      head = MakeNode(w == "fst" ? Node::kFst : w == "snd" ? Node::kSnd : Node::kRefl, {a});
    } else if (IsWord("Id")) {
      Next();
      ExprPtr a = ParseAtom();
      ExprPtr t = ParseAtom();
      ExprPtr u = ParseAtom();
      head = MakeNode(Node::kId, {a, t, u});
    } else if (IsWord("exfalso")) {
      Next();
      ExprPtr t = ParseAtom();
      ExprPtr e = ParseAtom();
      head = MakeNode(Node::kExfalso, {t, e});
    } else if (IsWord("J")) {
      Next();
      std::vector<std::string> mb;
      ExprPtr motive = ParseBound(mb, 3, 3);
      std::vector<std::string> hb;
      ExprPtr step = ParseBound(hb, 1, 1);
      ExprPtr e = ParseAtom();
      head = MakeNode(Node::kJ, {motive, step, e}, {mb[0], mb[1], mb[2], hb[0]});
    } else {
      head = ParseAtom();
    }
    head = Spanned(head, start);
    while (AtomStart()) head = Spanned(MakeApp(head, ParseAtom()), start);
    return head;
  }

  // '(' x1 .. xn '.' body ')' with min <= n <= max.
  ExprPtr ParseBound(std::vector<std::string>& names, std::size_t min, std::size_t max) {
    Expect("(");
    while (!IsSym(".")) names.push_back(Name());
    if (names.size() < min || names.size() > max) Fail("wrong number of bound names");
    Next();
    ExprPtr body = Under(names, [&] { return ParseExpr(); });
    Expect(")");
    return body;
  }

  ExprPtr ParseAtom() {
    Span start = Peek().span;
    if (IsWord("Unit")) {
      Next();
      return Spanned(MakeNode(Node::kUnitType, {}), start);
    }
    if (IsWord("case")) {
      Next();
      ExprPtr scrut = ParseExpr();
      ExprPtr motive;
      std::vector<std::string> binders{"y"};
      if (IsWord("return")) {
        Next();
        binders.clear();
        motive = ParseBound(binders, 1, 2);
      }
      ExpectWord("of");
      Expect("{");
      std::vector<Branch> branches;
      while (!IsSym("}")) {
        std::string c = Name();
        Expect("=>");
        branches.push_back({c, ParseExpr()});
        if (!IsSym(";")) break;
        Next();
      }
      Expect("}");
      return Spanned(MakeCase(scrut, motive, binders, std::move(branches)), start);
    }
    if (IsSym("(")) {
      Next();
      if (IsSym(")")) {
        Next();
        return Spanned(MakeNode(Node::kUnit, {}), start);
      }
      ExprPtr a = ParseExpr();
      if (IsSym(",")) {
        Next();
        ExprPtr b = ParseExpr();
        Expect(")");
        return Spanned(MakeNode(Node::kPair, {a, b}), start);
      }
      if (IsSym(":")) {
        Next();
        ExprPtr t = ParseExpr();
        Expect(")");
        return Spanned(MakeNode(Node::kAnn, {a, t}), start);
      }
      Expect(")");
      return a;
    }
    if (Peek().kind == Tok::kIdent && !Keywords().count(Peek().text)) {
      return Spanned(Lookup(Next().text), start);
    }
    if (Peek().kind == Tok::kEnd) Fail("unexpected end of input");
    Fail("unexpected '" + Peek().text + "'");
  }

  std::vector<std::string> ParseCtorList() {
    std::vector<std::string> out;
    while (true) {
      Span at = Peek().span;
      std::string lo = Name();
      if (IsSym("..")) {
        Next();
        std::string hi = Name();
        for (auto& c : ExpandRange(lo, hi, at)) out.push_back(std::move(c));
      } else {
        out.push_back(lo);
      }
      if (!IsSym("|")) break;
      Next();
    }
    return out;
  }

  Decl ParseDef() {
    Span start = Peek().span;
    ExpectWord("def");
    DefDecl d;
    d.name = Name();
    Expect(":");
    d.type = ParseExpr();
    Expect(":=");
    d.body = ParseExpr();
    d.span = start;
    return d;
  }

  Decl ParseData() {
    Span start = Peek().span;
    ExpectWord("data");
    DataDecl d;
    d.name = Name();
    Expect("{");
    if (!IsSym("}")) d.constructors = ParseCtorList();
    Expect("}");
    d.span = start;
    return d;
  }

  Decl ParseFamily() {
    Span start = Peek().span;
    ExpectWord("family");
    FamilyDecl f;
    f.name = Name();
    Expect("(");
    f.binder = Name();
    Expect(":");
    f.index = Name();
    Expect(")");
    Expect("{");
    while (!IsSym("}")) {
      FamilyDecl::Point p;
      p.point = ParseAtom();
      Expect("=>");
      p.constructors = ParseCtorList();
      f.points.push_back(std::move(p));
      if (!IsSym(";")) break;
      Next();
    }
    Expect("}");
    f.span = start;
    return f;
  }

  std::vector<Token> toks_;
  std::vector<std::string> scope_;
  std::size_t pos_ = 0;
};

// Printing.

class Printer {
 public:
  std::string Print(const ExprPtr& e, std::vector<std::string>& names, int prec) {
    switch (e->node) {
      case Node::kVar: {
        int k = static_cast<int>(names.size()) - 1 - e->index;
        return k >= 0 ? names[k] : "#" + std::to_string(e->index);
      }
      case Node::kGlobal:
        return e->name;
      case Node::kUnitType:
        return "Unit";
      case Node::kUnit:
        return "()";
      case Node::kPi:
      case Node::kSigma: {
        bool pi = e->node == Node::kPi;
        if (!Mentions(e->kids[1], 0)) {
          std::string a = Print(e->kids[0], names, pi ? 1 : 2);
          names.push_back("_");
          std::string b = Print(e->kids[1], names, pi ? 0 : 1);
          names.pop_back();
          return Paren(a + (pi ? " → " : " × ") + b, prec > (pi ? 0 : 1));
        }
        std::string x = Fresh(e->binders[0], names);
        std::string a = Print(e->kids[0], names, 0);
        names.push_back(x);
        std::string b = Print(e->kids[1], names, 0);
        names.pop_back();
        return Paren(std::string(pi ? "Π(" : "Σ(") + x + " : " + a + "). " + b, prec > 0);
      }
      case Node::kId:
        return Paren("Id " + Print(e->kids[0], names, 3) + " " + Print(e->kids[1], names, 3) + " " +
                         Print(e->kids[2], names, 3),
                     prec > 2);
      case Node::kLam: {
        std::string x = Fresh(e->binders[0], names);
        std::string head = e->kids[0] ? "λ(" + x + " : " + Print(e->kids[0], names, 0) + "). "
                                      : "λ" + x + ". ";
        names.push_back(x);
        std::string b = Print(e->kids[1], names, 0);
        names.pop_back();
        return Paren(head + b, prec > 0);
      }
      case Node::kApp:
        return Paren(Print(e->kids[0], names, 2) + " " + Print(e->kids[1], names, 3), prec > 2);
      case Node::kPair:
        return "(" + Print(e->kids[0], names, 0) + ", " + Print(e->kids[1], names, 0) + ")";
      case Node::kFst:
        return Paren("fst " + Print(e->kids[0], names, 3), prec > 2);
      case Node::kSnd:
        return Paren("snd " + Print(e->kids[0], names, 3), prec > 2);
      case Node::kRefl:
        return Paren("refl " + Print(e->kids[0], names, 3), prec > 2);
      case Node::kExfalso:
        return Paren("exfalso " + Print(e->kids[0], names, 3) + " " + Print(e->kids[1], names, 3),
                     prec > 2);
      case Node::kAnn:
        return "(" + Print(e->kids[0], names, 0) + " : " + Print(e->kids[1], names, 0) + ")";
      case Node::kJ: {
        std::vector<std::string> mb;
        for (int i = 0; i < 3; ++i) {
          mb.push_back(Fresh(e->binders[i], names));
          names.push_back(mb.back());
        }
        std::string motive = Print(e->kids[0], names, 0);
        names.resize(names.size() - 3);
        std::string hx = Fresh(e->binders[3], names);
        names.push_back(hx);
        std::string step = Print(e->kids[1], names, 0);
        names.pop_back();
        return Paren("J (" + mb[0] + " " + mb[1] + " " + mb[2] + ". " + motive + ") (" + hx + ". " +
                         step + ") " + Print(e->kids[2], names, 3),
                     prec > 2);
      }
      case Node::kCase: {
        std::string out = "case " + Print(e->kids[0], names, 0);
        if (e->kids[1]) {
          std::vector<std::string> bs;
          for (const auto& b : e->binders) {
            bs.push_back(Fresh(b, names));
            names.push_back(bs.back());
          }
          std::string motive = Print(e->kids[1], names, 0);
          names.resize(names.size() - bs.size());
          out += " return (";
          for (const auto& b : bs) out += b + " ";
          out.back() = '.';
          out += " " + motive + ")";
        }
        out += " of {";
        for (std::size_t i = 0; i < e->branches.size(); ++i) {
          out += (i ? "; " : " ") + e->branches[i].constructor + " => " +
                 Print(e->branches[i].body, names, 0);
        }
        return out + (e->branches.empty() ? "}" : " }");
      }
    }
    return "?";
  }

 private:
  static std::string Paren(const std::string& s, bool wrap) { return wrap ? "(" + s + ")" : s; }
  static std::string Fresh(std::string x, const std::vector<std::string>& names) {
    if (x.empty() || x == "_") x = "x";
    while (std::find(names.begin(), names.end(), x) != names.end()) x += "'";
    return x;
  }
};

std::string CtorList(const std::vector<std::string>& cs) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    return std::make_pair(s.substr(0, k), s.substr(k));
  };
  std::string out;
  std::size_t i = 0;
  while (i < cs.size()) {
    auto [p, n] = split(cs[i]);
    std::size_t j = i;
    if (!n.empty() && std::to_string(std::stol(n)) == n) {
      long v = std::stol(n);
      while (j + 1 < cs.size()) {
        auto [p2, n2] = split(cs[j + 1]);
        if (p2 != p || n2.empty() || n2 != std::to_string(v + static_cast<long>(j + 1 - i))) break;
        ++j;
      }
    }
    if (!out.empty()) out += " | ";
    if (j - i >= 2) {
      out += cs[i] + ".." + cs[j];
    } else {
      j = i;
      out += cs[i];
    }
    i = j + 1;
  }
  return out;
}

}  // namespace

ExprPtr ParseExpr(std::string_view text, const std::vector<std::string>& scope) {
  return Parser(text, scope).ParseWholeExpr();
}

std::vector<Decl> ParseModule(std::string_view text) { return Parser(text).ParseDecls(); }

std::string Print(const ExprPtr& e, const std::vector<std::string>& names) {
  std::vector<std::string> n = names;
  return Printer().Print(e, n, 0);
}

std::string PrintDecl(const Decl& d) {
  if (const auto* def = std::get_if<DefDecl>(&d)) {
    return "def " + def->name + " : " + Print(def->type) + " := " + Print(def->body);
  }
  if (const auto* data = std::get_if<DataDecl>(&d)) {
    return "data " + data->name + " { " + CtorList(data->constructors) + " }";
  }
  const auto& f = std::get<FamilyDecl>(d);
  std::string out = "family " + f.name + " (" + f.binder + " : " + f.index + ") {\n";
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    out += "  " + Print(f.points[i].point) + " => " + CtorList(f.points[i].constructors);
    out += i + 1 < f.points.size() ? ";\n" : "\n";
  }
  return out + "}";
}

std::string PrintModule(const std::vector<Decl>& decls) {
  std::string out;
  for (const auto& d : decls) out += PrintDecl(d) + "\n";
  return out;
}

bool DeclsEqual(const Decl& a, const Decl& b) {
  if (a.index() != b.index()) return false;
  if (const auto* x = std::get_if<DefDecl>(&a)) {
    const auto& y = std::get<DefDecl>(b);
    return x->name == y.name && AlphaEqual(x->type, y.type) && AlphaEqual(x->body, y.body);
  }
  if (const auto* x = std::get_if<DataDecl>(&a)) {
    const auto& y = std::get<DataDecl>(b);
    return x->name == y.name && x->constructors == y.constructors;
  }
  const auto& x = std::get<FamilyDecl>(a);
  const auto& y = std::get<FamilyDecl>(b);
  if (x.name != y.name || x.index != y.index || x.points.size() != y.points.size()) return false;
  for (std::size_t i = 0; i < x.points.size(); ++i) {
    if (!AlphaEqual(x.points[i].point, y.points[i].point) ||
        x.points[i].constructors != y.points[i].constructors) {
      return false;
    }
  }
  return true;
}

}  // namespace dttg::dtt
