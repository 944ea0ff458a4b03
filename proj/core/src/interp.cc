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

#include "dttg/interp.h"

#include "dttg/error.h"
#include "dttg/fixtures.h"

namespace dttg {

using dtt::Expr;
using dtt::ExprPtr;
using dtt::Node;

namespace {

ExprPtr Global(const std::string& name) { return dtt::MakeGlobal(name); }

}  // namespace

Interpreter::Interpreter(const dtt::Signature& sig, Cwf cwf)
    : sig_(sig), cwf_(cwf), unit_base_(Flat({"unit"}, "One")) {
  for (const auto& decl : sig.Decls()) {
    if (const auto* d = std::get_if<dtt::DataDecl>(&decl)) {
      families_.emplace(d->name, MakeFamily(unit_base_, {{"unit", Point(unit_base_, "unit"), d->constructors}},
                                            d->name));
    } else if (const auto* f = std::get_if<dtt::FamilyDecl>(&decl)) {
      const FiniteFamily& index = families_.at(f->index);
      const auto& names = sig.PointNames(f->name);
      std::vector<FiniteFamily::Point> points;
      for (std::size_t i = 0; i < names.size(); ++i) {
        points.push_back({names[i], Point(index.total, names[i]), f->points[i].constructors});
      }
      families_.emplace(f->name, MakeFamily(index.total, std::move(points), f->name));
    }
  }
}

const FiniteFamily& Interpreter::Family(const std::string& name) const {
  auto it = families_.find(name);
  if (it == families_.end()) throw Error(ErrorCode::kType, "no family or data type named " + name);
  return it->second;
}

Interpreter::Scope Interpreter::Bind(const Scope& s, const std::string& name, const TyEntry& a,
                                     const ExprPtr& type) const {
  Scope out = s;
  out.slots.push_back({a, s.ctx.size(), false});
  out.ctx = a.Extended();
  out.tel.push_back({name, type});
  return out;
}

Interpreter::Scope Interpreter::BindHidden(const Scope& s, const TyEntry& a) const {
  Scope out = s;
  out.slots.push_back({a, s.ctx.size(), true});
  out.ctx = a.Extended();
  return out;
}

Interpreter::Scope Interpreter::FromTelescope(const dtt::Telescope& ctx) {
  Scope s;
  for (const auto& b : ctx) s = Bind(s, b.name, Ty(s, b.type), b.type);
  return s;
}

ContextGame Interpreter::Context(const dtt::Telescope& ctx) { return FromTelescope(ctx).ctx; }

TyEntry Interpreter::Type(const dtt::Telescope& ctx, const ExprPtr& type) {
  Scope s = FromTelescope(ctx);
  return Ty(s, dtt::NormalizeType(sig_, ctx, type));
}

Term Interpreter::Interpret(const dtt::Telescope& ctx, const ExprPtr& term, const ExprPtr& type) {
  Scope s = FromTelescope(ctx);
  ExprPtr t = dtt::Check(sig_, ctx, term, type);
  return Tm(s, t, dtt::NormalizeType(sig_, ctx, type));
}

Term Interpreter::Definition(const std::string& name) {
  const auto* d = sig_.Def(name);
  if (!d) throw Error(ErrorCode::kType, "no definition named " + name);
  return Tm(Scope{}, d->body, d->type);
}

TyEntry Interpreter::Ty(const Scope& s, const ExprPtr& type) {
  switch (type->node) {
    case Node::kUnitType:
      return cwf_.UnitType(s.ctx);
    case Node::kGlobal:
      return cwf_.FamilyAt(s.ctx, Family(type->name), 0);
    case Node::kApp: {
      const FiniteFamily& fam = Family(type->kids[0]->name);
      const std::string& index = sig_.Family(type->kids[0]->name)->index;
      ExprPtr idx = dtt::Normalize(sig_, s.tel, type->kids[1], Global(index));
      if (idx->node == Node::kGlobal) {
        for (std::size_t i = 0; i < fam.points.size(); ++i) {
          if (fam.points[i].name == idx->name) return cwf_.FamilyAt(s.ctx, fam, static_cast<int>(i));
        }
        // A point with no declared fibre.
        Game empty = fam.family.Bottom();
        return {s.ctx, {DependentGame::FromFunction(
                           fam.total, s.ctx.totals(), [empty](std::span<const Strategy>) { return empty; },
                           fam.family.name())}};
      }
      Term t = Tm(s, idx, Global(index));
      Strategy part = t.parts[0];
      Game base = fam.base;
      DependentGame b = fam.family;
      Cwf cwf = cwf_;
      return {s.ctx, {DependentGame::FromFunction(
                         fam.total, s.ctx.totals(),
                         [cwf, part, base, b](std::span<const Strategy> args) {
                           return b.At({cwf.Apply(part, args, base)});
                         },
                         b.name())}};
    }
    case Node::kPi:
    case Node::kSigma: {
      TyEntry a = Ty(s, type->kids[0]);
      TyEntry b = Ty(Bind(s, type->binders[0], a, type->kids[0]), type->kids[1]);
      return type->node == Node::kPi ? cwf_.Pi(a, b) : cwf_.Sigma(a, b);
    }
    case Node::kId: {
      TyEntry a = Ty(s, type->kids[0]);
      return cwf_.Id(a, Tm(s, type->kids[1], type->kids[0]), Tm(s, type->kids[2], type->kids[0]));
    }
    default:
      throw Error(ErrorCode::kType, "not a type: " + dtt::Print(type));
  }
}

ExprPtr Interpreter::TypeOf(const Scope& s, const ExprPtr& term) const {
  return dtt::Infer(sig_, s.tel, term).type;
}

Term Interpreter::Var(const Scope& s, int index) const {
  int seen = -1;
  for (std::size_t k = s.slots.size(); k-- > 0;) {
    if (s.slots[k].hidden) continue;
    if (++seen == index) return cwf_.Variable(s.ctx, s.slots[k].type, s.slots[k].offset);
  }
  throw Error(ErrorCode::kType, "unbound variable in interpretation");
}

Term Interpreter::Unit(const Scope& s) const { return {s.ctx, cwf_.UnitType(s.ctx), {}}; }

Term Interpreter::PointTerm(const ContextGame& g, const TyEntry& a, const std::string& answer) const {
  std::size_t n = g.size();
  Game game = cwf_.HomGame(g, cwf_.TermFibre(a, {}, 0));
  Strategy s = Strategy::Explore(game, [n, answer](const Play& p) -> std::optional<Move> {
    if (p.size() != 1) return std::nullopt;
    return Move{std::vector<Tag>(n, kRight), answer};
  });
  return {g, a, {s}};
}

Term Interpreter::Instantiate(const Scope& s, const Term& t, const std::vector<const Term*>& extra) const {
  Morphism f = cwf_.Identity(s.ctx);
  f.target = t.ctx;
  for (const Term* e : extra) f.parts.insert(f.parts.end(), e->parts.begin(), e->parts.end());
  return cwf_.TmSubst(t, f);
}

Term Interpreter::Tm(const Scope& s, const ExprPtr& e, const ExprPtr& type) {
  switch (e->node) {
    case Node::kVar:
      return Var(s, e->index);
    case Node::kGlobal: {
      if (const auto* d = sig_.Def(e->name)) return Tm(s, d->body, d->type);
      const auto* c = sig_.Ctor(e->name);
      if (!c) throw Error(ErrorCode::kType, "cannot interpret " + e->name);
      return cwf_.Constructor(s.ctx, Family(c->owner), e->name);
    }
    case Node::kUnit:
      return Unit(s);
    case Node::kAnn:
      return Tm(s, e->kids[0], e->kids[1]);
    case Node::kLam: {
      ExprPtr dom = type->kids[0];
      TyEntry a = Ty(s, dom);
      Term body = Tm(Bind(s, e->binders[0], a, dom), e->kids[1], type->kids[1]);
      return cwf_.Lambda(a, body);
    }
    case Node::kApp: {
      ExprPtr ft = TypeOf(s, e->kids[0]);
      Term f = Tm(s, e->kids[0], ft);
      TyEntry a = Ty(s, ft->kids[0]);
      Term x = Tm(s, e->kids[1], ft->kids[0]);
      TyEntry y = Ty(Bind(s, ft->binders[0], a, ft->kids[0]), ft->kids[1]);
      return cwf_.App(f, x, y);
    }
    case Node::kPair: {
      TyEntry a = Ty(s, type->kids[0]);
      TyEntry b = Ty(Bind(s, type->binders[0], a, type->kids[0]), type->kids[1]);
      Term x = Tm(s, e->kids[0], type->kids[0]);
      Term y = Tm(s, e->kids[1], dtt::Instantiate(type->kids[1], {e->kids[0]}));
      Term out{s.ctx, cwf_.Sigma(a, b), x.parts};
      out.parts.insert(out.parts.end(), y.parts.begin(), y.parts.end());
      return out;
    }
    case Node::kFst:
    case Node::kSnd: {
      ExprPtr pt = TypeOf(s, e->kids[0]);
      Term p = Tm(s, e->kids[0], pt);
      TyEntry a = Ty(s, pt->kids[0]);
      std::size_t m = a.entries.size();
      if (e->node == Node::kFst) return {s.ctx, a, {p.parts.begin(), p.parts.begin() + m}};
      ExprPtr first = dtt::MakeNode(Node::kFst, {e->kids[0]});
      TyEntry b = Ty(s, dtt::Instantiate(pt->kids[1], {first}));
      return {s.ctx, b, {p.parts.begin() + m, p.parts.end()}};
    }
    case Node::kRefl:
      return cwf_.Refl(Tm(s, e->kids[0], type->kids[0]));
    case Node::kCase:
      return Case(s, e);
    case Node::kJ:
      return J(s, e);
    case Node::kExfalso:
      return Exfalso(s, e, e->kids[0]);
    default:
      throw Error(ErrorCode::kType, "not a term: " + dtt::Print(e));
  }
}

Term Interpreter::Case(const Scope& s, const ExprPtr& e) {
  const std::string& owner = e->name;
  const FiniteFamily& fam = Family(owner);
  const auto* fdecl = sig_.Family(owner);
  ExprPtr scrut_type = TypeOf(s, e->kids[0]);
  Term scrut = Tm(s, e->kids[0], scrut_type);

  Scope sx;
  Term index;
  if (fdecl) {
    ExprPtr idx_type = Global(fdecl->index);
    TyEntry xa = Ty(s, idx_type);
    sx = Bind(s, e->binders[0], xa, idx_type);
    index = Tm(s, e->kids[2], idx_type);
  } else {
    TyEntry xa{s.ctx, {DependentGame::Constant(unit_base_, s.ctx.totals())}};
    sx = BindHidden(s, xa);
    index = PointTerm(s.ctx, xa, "unit");
  }
  ExprPtr y_type = fdecl ? dtt::MakeApp(Global(owner), dtt::MakeVar(0)) : Global(owner);
  TyEntry ya = cwf_.FamilyOver(sx.ctx, fam);
  Scope sxy = Bind(sx, e->binders.back(), ya, y_type);
  TyEntry c = Ty(sxy, e->kids[1]);

  std::map<std::string, Term> branches;
  for (const auto& br : e->branches) {
    std::vector<ExprPtr> args{Global(br.constructor)};
    if (fdecl) {
      const auto* ctor = sig_.Ctor(br.constructor);
      args.insert(args.begin(), Global(sig_.PointNames(owner)[ctor->point]));
    }
    branches.emplace(br.constructor, Tm(s, br.body, dtt::Instantiate(e->kids[1], args)));
  }
  Term body = cwf_.Case(s.ctx, fam, c, branches);
  return Instantiate(s, body, {&index, &scrut});
}

Term Interpreter::J(const Scope& s, const ExprPtr& e) {
  ExprPtr a_type = e->kids[3];
  TyEntry a = Ty(s, a_type);
  Scope s1 = Bind(s, e->binders[0], a, a_type);
  Scope s2 = Bind(s1, e->binders[1], cwf_.WeakenType(a, s1.ctx), dtt::Shift(a_type, 1));
  ExprPtr id_type = dtt::MakeNode(Node::kId, {dtt::Shift(a_type, 2), dtt::MakeVar(1), dtt::MakeVar(0)});
  Scope s3 = Bind(s2, e->binders[2], Ty(s2, id_type), id_type);
  TyEntry c = Ty(s3, e->kids[0]);
  ExprPtr x = dtt::MakeVar(0);
  ExprPtr step_type =
      dtt::Instantiate(dtt::Shift(e->kids[0], 1, 3), {x, x, dtt::MakeNode(Node::kRefl, {x})});
  Scope sh = Bind(s, e->binders[3], a, a_type);
  Term h = Tm(sh, e->kids[1], step_type);
  Term body = cwf_.J(a, c, h);
  Term t = Tm(s, e->kids[4], a_type);
  Term u = Tm(s, e->kids[5], a_type);
  Term p = Tm(s, e->kids[2], dtt::MakeNode(Node::kId, {a_type, e->kids[4], e->kids[5]}));
  return Instantiate(s, body, {&t, &u, &p});
}

Term Interpreter::Exfalso(const Scope& s, const ExprPtr& e, const ExprPtr& type) {
  ExprPtr pt = TypeOf(s, e->kids[1]);
  TyEntry id = Ty(s, pt);
  Scope sp = Bind(s, "p", id, pt);
  TyEntry c = Ty(sp, dtt::Shift(type, 1));
  Term p = Tm(s, e->kids[1], pt);
  return Instantiate(s, cwf_.Exfalso(id, c), {&p});
}

bool SemanticEqual(Interpreter& in, const ExprPtr& t, const ExprPtr& u, const ExprPtr& type) {
  return Cwf::Equal(in.Interpret({}, t, type), in.Interpret({}, u, type));
}

}  // namespace dttg
