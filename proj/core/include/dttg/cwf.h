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

// The category with families of context games: morphisms and terms as lists
// of winning strategies, substitution, comprehension, and the type formers
// 1, Σ, Π, Id and finite inductive families.

#ifndef DTTG_CWF_H_
#define DTTG_CWF_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "dttg/depgame.h"
#include "dttg/strategy.h"

namespace dttg {

// A list of dependent games over `over`: entries[j] depends on
// over ++ entries[0..j).
struct TyEntry {
  ContextGame over;
  std::vector<DependentGame> entries;

  ContextGame Extended() const;
};

// [f_1..f_m] : source -> target, f_j on Osat(Π_source target_j{f_<j}).
struct Morphism {
  ContextGame source;
  ContextGame target;
  std::vector<Strategy> parts;
};

// A section of Γ.A -> Γ, stored by its A-components.
struct Term {
  ContextGame ctx;
  TyEntry type;
  std::vector<Strategy> parts;
};

// {⊥ ↦ ∅̃_*, a_i ↦ flat{b_i1..}} over a closed flat base game.
struct FiniteFamily {
  struct Point {
    std::string name;
    Strategy value;
    std::vector<std::string> constructors;
  };
  Game base;
  std::vector<Point> points;
  Game total;
  DependentGame family;

  // Point index and constructor index of a constructor name.
  std::pair<int, int> Find(const std::string& constructor) const;
};

FiniteFamily MakeFamily(Game base, std::vector<FiniteFamily::Point> points,
                        const std::string& name = "");

class Cwf {
 public:
  explicit Cwf(int k, Limits limits = {}) : k_(k), limits_(limits) {}

  int bound() const { return k_; }
  const Limits& limits() const { return limits_; }

  Game HomGame(const ContextGame& g, const DependentGame& y) const;
  // ⟨σ_1..σ_n⟩†;f for closed arguments.
  Strategy Apply(const Strategy& f, std::span<const Strategy> args, const Game& result) const;
  // y over target[0..r) as a game over `source`, by f's first r parts.
  DependentGame Reindex(const DependentGame& y, const ContextGame& source,
                        const ContextGame& target, std::span<const Strategy> parts) const;
  // x over a prefix of g as a game over g.
  DependentGame Weaken(const DependentGame& x, const ContextGame& g) const;
  // Fibre of the j-th component of a term with the given earlier parts.
  DependentGame TermFibre(const TyEntry& a, std::span<const Strategy> parts, std::size_t j) const;

  // Morphisms.
  Morphism Identity(const ContextGame& g) const;
  // f;g (diagrammatic order).
  Morphism Compose(const Morphism& f, const Morphism& g) const;
  Morphism P(const TyEntry& a) const;
  Term V(const TyEntry& a) const;
  // ⟨f, t⟩ : source(f) -> target(f).A for t : Tm(source(f), A{f}).
  Morphism Extend(const Morphism& f, const TyEntry& a, const Term& t) const;
  // Γ -> Γ[0..m) forgetting the later entries.
  Morphism Projection(const ContextGame& g, std::size_t m) const;
  // A over g[0..offset) as a type over g.
  TyEntry WeakenType(const TyEntry& a, const ContextGame& g) const;
  // The variable whose entries start at `offset`: a lives over g[0..offset)
  // and its entries are g[offset..).
  Term Variable(const ContextGame& g, const TyEntry& a, std::size_t offset) const;
  // The morphism Γ -> Γ.A of a term.
  Morphism Section(const Term& t) const;

  // Substitution.
  TyEntry TySubst(const TyEntry& a, const Morphism& f) const;
  Term TmSubst(const Term& t, const Morphism& f) const;

  // Each part winning on its hom game.
  bool WellTyped(const Morphism& f) const;
  bool WellTyped(const Term& t) const;
  // Parts re-explored on their hom games.
  Morphism Retyped(const Morphism& f) const;
  Term Retyped(const Term& t) const;
  static bool Equal(const Morphism& f, const Morphism& g);
  static bool Equal(const Term& t, const Term& u);
  // Fibres agree on sampled parameters (⊥ plus up to `width` winning
  // strategies per entry).
  bool TypesEqual(const TyEntry& a, const TyEntry& b, std::size_t width = 4) const;

  // Type formers.
  TyEntry UnitType(const ContextGame& g) const { return {g, {}}; }
  TyEntry Sigma(const TyEntry& a, const TyEntry& b) const;
  TyEntry Pi(const TyEntry& a, const TyEntry& y) const;
  // λ: Tm(Γ.A, Y) -> Tm(Γ, Π A Y).
  Term Lambda(const TyEntry& a, const Term& body) const;
  // Application f a : Tm(Γ, Y{⟨id, a⟩}).
  Term App(const Term& f, const Term& a, const TyEntry& y) const;

  TyEntry Id(const TyEntry& y, const Term& t, const Term& u) const;
  Term Refl(const Term& t) const;
  // J(H) over Γ.x:A.y:A.p:Id(x,y) for H : Tm(Γ.x:A, C{x,x,refl x}); `c` is the
  // motive over Γ.A.A.Id.
  Term J(const TyEntry& a, const TyEntry& c, const Term& h) const;
  // Id(x, y) over Γ.x:A.y:A.
  TyEntry IdOverPair(const TyEntry& a) const;
  // Id_{Id(x,y)}(p, q) over Γ.x:A.y:A.p:Id(x,y).q:Id(x,y).
  TyEntry UipType(const TyEntry& a) const;
  // UIP : Tm(Γ.x.y.p.q, Id_{Id(x,y)}(p, q)), copycat onto p.
  Term Uip(const TyEntry& a) const;

  // Finite families.
  TyEntry FamilyAt(const ContextGame& g, const FiniteFamily& fam, int point) const;
  TyEntry FamilyOver(const ContextGame& g, const FiniteFamily& fam) const;
  Term Constructor(const ContextGame& g, const FiniteFamily& fam, const std::string& name) const;
  // case over Γ.x:A.y:B(x) with branches z_ij : Tm(Γ, C{a_i, b_ij}).
  Term Case(const ContextGame& g, const FiniteFamily& fam, const TyEntry& c,
            const std::map<std::string, Term>& branches) const;
  // exfalso over Γ.p:Id(...) for a motive c over Γ.p whose Id fibre is empty.
  Term Exfalso(const TyEntry& id, const TyEntry& c) const;

 private:
  int k_;
  Limits limits_;
};

}  // namespace dttg

#endif  // DTTG_CWF_H_
