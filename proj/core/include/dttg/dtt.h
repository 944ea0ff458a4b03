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

// A small intensional type theory with 1, Σ, Π, Id, Bool, enumerated data
// types and finite inductive families: syntax, checking and conversion.

#ifndef DTTG_DTT_H_
#define DTTG_DTT_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dttg::dtt {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 1;
  int col = 1;
};

enum class Node {
  kVar,       // de Bruijn index
  kGlobal,    // definition, constructor, data type or family name
  kUnitType,
  kUnit,
  kPi,        // binders[0]; kids: domain, codomain
  kSigma,     // binders[0]; kids: first, second
  kId,        // kids: type, lhs, rhs
  kLam,       // binders[0]; kids: domain (may be null), body
  kApp,
  kPair,
  kFst,
  kSnd,
  kRefl,
  kJ,         // binders x y p h; kids: motive, step, proof [, A, lhs, rhs once checked]
  kCase,      // binders x y (family) or y (data); kids: scrutinee, motive (may be null)
              // [, index once checked]; branches
  kExfalso,   // kids: type, proof
  kAnn,       // kids: term, type
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Branch {
  std::string constructor;
  ExprPtr body;
};

struct Expr {
  Node node = Node::kUnit;
  Span span;
  int index = -1;
  std::string name;
  std::vector<std::string> binders;
  std::vector<ExprPtr> kids;
  std::vector<Branch> branches;
};

ExprPtr MakeVar(int index, std::string name = "");
ExprPtr MakeGlobal(std::string name);
ExprPtr MakeNode(Node node, std::vector<ExprPtr> kids, std::vector<std::string> binders = {});
ExprPtr MakeApp(ExprPtr f, ExprPtr a);
ExprPtr MakeCase(ExprPtr scrutinee, ExprPtr motive, std::vector<std::string> binders,
                 std::vector<Branch> branches);

// Structural equality up to binder names and spans.
bool AlphaEqual(const ExprPtr& a, const ExprPtr& b);
// Adds d to every variable index >= cutoff.
ExprPtr Shift(const ExprPtr& e, int d, int cutoff = 0);
// Free variable test for index i.
bool Mentions(const ExprPtr& e, int i);
// Replaces the innermost args.size() variables of `body`; args[0] is the
// outermost and args live in the enclosing scope.
ExprPtr Instantiate(const ExprPtr& body, const std::vector<ExprPtr>& args);
std::size_t Size(const ExprPtr& e);

struct DataDecl {
  std::string name;
  std::vector<std::string> constructors;
  Span span;
};

struct FamilyDecl {
  struct Point {
    ExprPtr point;
    std::vector<std::string> constructors;
  };
  std::string name;
  std::string binder;
  std::string index;  // data type of the index
  std::vector<Point> points;
  Span span;
};

struct DefDecl {
  std::string name;
  ExprPtr type;
  ExprPtr body;
  Span span;
};

using Decl = std::variant<DataDecl, FamilyDecl, DefDecl>;

// Parsing. Errors are kParse with "line:col: message".
// Names in `scope` are bound variables, innermost last.
ExprPtr ParseExpr(std::string_view text, const std::vector<std::string>& scope = {});
std::vector<Decl> ParseModule(std::string_view text);

// Printing (parseable; names disambiguated by primes).
std::string Print(const ExprPtr& e, const std::vector<std::string>& names = {});
std::string PrintDecl(const Decl& d);
std::string PrintModule(const std::vector<Decl>& decls);
bool DeclsEqual(const Decl& a, const Decl& b);

struct Binding {
  std::string name;
  ExprPtr type;  // checked, scoped over the preceding bindings
};
using Telescope = std::vector<Binding>;

class Signature {
 public:
  struct Constructor {
    std::string owner;
    bool family = false;
    int point = 0;  // family point index
  };
  struct Definition {
    ExprPtr type;  // checked
    ExprPtr body;  // checked
  };

  Signature();  // declares Bool

  // Validated and checked additions. Errors: kDuplicateConstructor,
  // kDuplicatePoint, kType.
  void Add(const Decl& d);
  void Load(std::string_view text);

  const DataDecl* Data(const std::string& name) const;
  const FamilyDecl* Family(const std::string& name) const;
  const Definition* Def(const std::string& name) const;
  const Constructor* Ctor(const std::string& name) const;
  // Constructor of the index type naming each point of a family.
  const std::vector<std::string>& PointNames(const std::string& family) const;
  const std::vector<std::string>& DefOrder() const { return def_order_; }
  const std::vector<Decl>& Decls() const { return decls_; }

 private:
  std::map<std::string, DataDecl> data_;
  std::map<std::string, FamilyDecl> families_;
  std::map<std::string, std::vector<std::string>> points_;
  std::map<std::string, Definition> defs_;
  std::map<std::string, Constructor> ctors_;
  std::vector<std::string> def_order_;
  std::vector<Decl> decls_;
};

// Bidirectional checking; results are elaborated (annotations filled in).
// Errors are kType.
ExprPtr CheckType(const Signature& sig, const Telescope& ctx, const ExprPtr& type);
ExprPtr Check(const Signature& sig, const Telescope& ctx, const ExprPtr& term, const ExprPtr& type);
struct Inferred {
  ExprPtr term;
  ExprPtr type;  // normal form
};
Inferred Infer(const Signature& sig, const Telescope& ctx, const ExprPtr& term);

// βη-normal form of a checked term at a checked type (definitions unfolded).
ExprPtr Normalize(const Signature& sig, const Telescope& ctx, const ExprPtr& term,
                  const ExprPtr& type);
ExprPtr NormalizeType(const Signature& sig, const Telescope& ctx, const ExprPtr& type);
bool DefEq(const Signature& sig, const Telescope& ctx, const ExprPtr& t, const ExprPtr& u,
           const ExprPtr& type);

}  // namespace dttg::dtt

#endif  // DTTG_DTT_H_
