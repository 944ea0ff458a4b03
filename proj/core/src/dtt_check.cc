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

#include <functional>
#include <set>

#include "dttg/dtt.h"
#include "dttg/error.h"

namespace dttg::dtt {

namespace {

struct Value;
struct Neutral;
using Val = std::shared_ptr<const Value>;
using Neu = std::shared_ptr<const Neutral>;
using Env = std::vector<Val>;

struct Closure {
  Env env;
  ExprPtr body;
  std::vector<std::string> names;
};

enum class V {
  kPi, kSigma, kUnitType, kId, kData, kFam, kFamHead,
  kLam, kPair, kUnit, kRefl, kCtor, kNeu,
};

struct Value {
  V k;
  std::string name;  // data, family or constructor name
  Val a, b, c;       // Pi/Sigma domain; Id type, lhs, rhs; pair; refl; family index
  Closure clo;       // Pi/Sigma codomain, lambda body
  Neu neu;
  Val type;          // type of a neutral
};

enum class N { kVar, kApp, kFst, kSnd, kCase, kJ, kExfalso };

struct Neutral {
  N k;
  int level = 0;
  Neu head;
  Val arg, arg_type;        // application
  Val scrut;                // case scrutinee (neutral value), J and exfalso proof
  std::string owner;        // case: data or family name
  bool family = false;
  Val index;                // family case index
  Closure motive;
  Env env;                  // case branches live here
  std::vector<Branch> branches;
  Closure step;             // J
  Val a, t, u;              // J
  Val type;                 // exfalso target, proof type
};

Val Mk(V k) {
  auto v = std::make_shared<Value>();
  v->k = k;
  return v;
}

Val MkCtor(const std::string& c) {
  auto v = std::make_shared<Value>();
  v->k = V::kCtor;
  v->name = c;
  return v;
}

Val MkData(const std::string& d) {
  auto v = std::make_shared<Value>();
  v->k = V::kData;
  v->name = d;
  return v;
}

Val MkFam(const std::string& f, Val index) {
  auto v = std::make_shared<Value>();
  v->k = V::kFam;
  v->name = f;
  v->a = std::move(index);
  return v;
}

Val MkNeu(Neu n, Val type) {
  auto v = std::make_shared<Value>();
  v->k = V::kNeu;
  v->neu = std::move(n);
  v->type = std::move(type);
  return v;
}

Val MkVar(int level, Val type) {
  auto n = std::make_shared<Neutral>();
  n->k = N::kVar;
  n->level = level;
  return MkNeu(n, std::move(type));
}

Val MkId(Val a, Val t, Val u) {
  auto v = std::make_shared<Value>();
  v->k = V::kId;
  v->a = std::move(a);
  v->b = std::move(t);
  v->c = std::move(u);
  return v;
}

Val MkRefl(Val w) {
  auto v = std::make_shared<Value>();
  v->k = V::kRefl;
  v->a = std::move(w);
  return v;
}

ExprPtr With(const ExprPtr& proto, Node node, std::vector<ExprPtr> kids) {
  auto e = std::make_shared<Expr>(*proto);
  e->node = node;
  e->kids = std::move(kids);
  return e;
}

std::string At(const Span& s) { return std::to_string(s.line) + ":" + std::to_string(s.col) + ": "; }

[[noreturn]] void TypeError(const ExprPtr& e, const std::string& msg) {
  throw Error(ErrorCode::kType, (e ? At(e->span) : std::string()) + msg);
}

class Machine {
 public:
  explicit Machine(const Signature& sig) : sig_(sig) {}

  Val Eval(const Env& env, const ExprPtr& e) {
    switch (e->node) {
      case Node::kVar: {
        int k = static_cast<int>(env.size()) - 1 - e->index;
        if (k < 0) throw Error(ErrorCode::kType, "unbound variable #" + std::to_string(e->index));
        return env[k];
      }
      case Node::kGlobal:
        return Global(e->name);
      case Node::kUnitType:
        return Mk(V::kUnitType);
      case Node::kUnit:
        return Mk(V::kUnit);
      case Node::kPi:
      case Node::kSigma: {
        auto v = std::make_shared<Value>();
        v->k = e->node == Node::kPi ? V::kPi : V::kSigma;
        v->a = Eval(env, e->kids[0]);
        v->clo = {env, e->kids[1], {e->binders[0]}};
        return v;
      }
      case Node::kId:
        return MkId(Eval(env, e->kids[0]), Eval(env, e->kids[1]), Eval(env, e->kids[2]));
      case Node::kLam: {
        auto v = std::make_shared<Value>();
        v->k = V::kLam;
        v->clo = {env, e->kids[1], {e->binders[0]}};
        return v;
      }
      case Node::kApp: {
        Val f = Eval(env, e->kids[0]);
        Val a = Eval(env, e->kids[1]);
        return Apply(f, a);
      }
      case Node::kPair: {
        auto v = std::make_shared<Value>();
        v->k = V::kPair;
        v->a = Eval(env, e->kids[0]);
        v->b = Eval(env, e->kids[1]);
        return v;
      }
      case Node::kFst:
        return Fst(Eval(env, e->kids[0]));
      case Node::kSnd:
        return Snd(Eval(env, e->kids[0]));
      case Node::kRefl:
        return MkRefl(Eval(env, e->kids[0]));
      case Node::kAnn:
        return Eval(env, e->kids[0]);
      case Node::kJ: {
        Val p = Eval(env, e->kids[2]);
        Closure step{env, e->kids[1], {e->binders[3]}};
        if (p->k == V::kRefl) return Inst(step, {p->a});
        if (e->kids.size() < 6) throw Error(ErrorCode::kType, "J evaluated before checking");
        auto n = std::make_shared<Neutral>();
        n->k = N::kJ;
        n->motive = {env, e->kids[0], {e->binders[0], e->binders[1], e->binders[2]}};
        n->step = step;
        n->scrut = p;
        n->a = Eval(env, e->kids[3]);
        n->t = Eval(env, e->kids[4]);
        n->u = Eval(env, e->kids[5]);
        Val type = Inst(n->motive, {n->t, n->u, p});
        return MkNeu(n, type);
      }
      case Node::kCase: {
        Val s = Eval(env, e->kids[0]);
        if (s->k == V::kCtor) {
          for (const auto& br : e->branches) {
            if (br.constructor == s->name) return Eval(env, br.body);
          }
          throw Error(ErrorCode::kType, At(e->span) + "no branch for " + s->name);
        }
        if (!e->kids[1]) throw Error(ErrorCode::kType, "case evaluated before checking");
        auto n = std::make_shared<Neutral>();
        n->k = N::kCase;
        n->scrut = s;
        n->owner = e->name;
        n->family = sig_.Family(e->name) != nullptr;
        n->index = e->kids.size() > 2 && e->kids[2] ? Eval(env, e->kids[2]) : nullptr;
        n->motive = {env, e->kids[1], e->binders};
        n->env = env;
        n->branches = e->branches;
        Val type = n->family ? Inst(n->motive, {n->index, s}) : Inst(n->motive, {s});
        return MkNeu(n, type);
      }
      case Node::kExfalso: {
        auto n = std::make_shared<Neutral>();
        n->k = N::kExfalso;
        n->type = Eval(env, e->kids[0]);
        n->scrut = Eval(env, e->kids[1]);
        return MkNeu(n, n->type);
      }
    }
    throw Error(ErrorCode::kType, "unknown node");
  }

  Val Inst(const Closure& c, const std::vector<Val>& args) {
    Env env = c.env;
    env.insert(env.end(), args.begin(), args.end());
    return Eval(env, c.body);
  }

  Val Apply(const Val& f, const Val& a) {
    if (f->k == V::kLam) return Inst(f->clo, {a});
    if (f->k == V::kFamHead) return MkFam(f->name, a);
    if (f->k == V::kNeu && f->type->k == V::kPi) {
      auto n = std::make_shared<Neutral>();
      n->k = N::kApp;
      n->head = f->neu;
      n->arg = a;
      n->arg_type = f->type->a;
      return MkNeu(n, Inst(f->type->clo, {a}));
    }
    throw Error(ErrorCode::kType, "application of a non-function");
  }

  Val Fst(const Val& p) {
    if (p->k == V::kPair) return p->a;
    if (p->k == V::kNeu && p->type->k == V::kSigma) {
      auto n = std::make_shared<Neutral>();
      n->k = N::kFst;
      n->head = p->neu;
      return MkNeu(n, p->type->a);
    }
    throw Error(ErrorCode::kType, "projection from a non-pair");
  }

  Val Snd(const Val& p) {
    if (p->k == V::kPair) return p->b;
    if (p->k == V::kNeu && p->type->k == V::kSigma) {
      auto n = std::make_shared<Neutral>();
      n->k = N::kSnd;
      n->head = p->neu;
      return MkNeu(n, Inst(p->type->clo, {Fst(p)}));
    }
    throw Error(ErrorCode::kType, "projection from a non-pair");
  }

  Val Global(const std::string& name) {
    if (auto it = defs_.find(name); it != defs_.end()) return it->second;
    if (const auto* d = sig_.Def(name)) {
      Val v = Eval({}, d->body);
      defs_[name] = v;
      return v;
    }
    if (sig_.Ctor(name)) return MkCtor(name);
    if (sig_.Data(name)) return MkData(name);
    if (sig_.Family(name)) {
      auto v = std::make_shared<Value>();
      v->k = V::kFamHead;
      v->name = name;
      return v;
    }
    throw Error(ErrorCode::kType, "unbound name " + name);
  }

  // Type of the constructor's point, as a value of the family's index type.
  Val PointOf(const std::string& ctor) {
    const auto* c = sig_.Ctor(ctor);
    return MkCtor(sig_.PointNames(c->owner)[c->point]);
  }

  // Readback.

  ExprPtr Quote(int lvl, const Val& type, const Val& v) {
    switch (type->k) {
      case V::kPi: {
        Val x = MkVar(lvl, type->a);
        ExprPtr body = Quote(lvl + 1, Inst(type->clo, {x}), Apply(v, x));
        return MakeNode(Node::kLam, {QuoteType(lvl, type->a), body}, {Name(type->clo, v)});
      }
      case V::kSigma: {
        Val a = Fst(v);
        return MakeNode(Node::kPair, {Quote(lvl, type->a, a), Quote(lvl, Inst(type->clo, {a}), Snd(v))});
      }
      case V::kUnitType:
        return MakeNode(Node::kUnit, {});
      case V::kId:
        if (v->k == V::kRefl) return MakeNode(Node::kRefl, {Quote(lvl, type->a, v->a)});
        break;
      case V::kData:
      case V::kFam:
        if (v->k == V::kCtor) return MakeGlobal(v->name);
        break;
      default:
        throw Error(ErrorCode::kType, "readback at a non-type");
    }
    if (v->k != V::kNeu) throw Error(ErrorCode::kType, "ill-typed value in readback");
    return QuoteNeutral(lvl, v->neu);
  }

  static std::string Name(const Closure& c, const Val& v) {
    if (v->k == V::kLam && !v->clo.names.empty() && v->clo.names[0] != "_") return v->clo.names[0];
    return c.names.empty() || c.names[0] == "_" ? "x" : c.names[0];
  }

  ExprPtr QuoteType(int lvl, const Val& t) {
    switch (t->k) {
      case V::kPi:
      case V::kSigma: {
        Val x = MkVar(lvl, t->a);
        ExprPtr cod = QuoteType(lvl + 1, Inst(t->clo, {x}));
        return MakeNode(t->k == V::kPi ? Node::kPi : Node::kSigma, {QuoteType(lvl, t->a), cod},
                        {t->clo.names[0]});
      }
      case V::kUnitType:
        return MakeNode(Node::kUnitType, {});
      case V::kId:
        return MakeNode(Node::kId, {QuoteType(lvl, t->a), Quote(lvl, t->a, t->b), Quote(lvl, t->a, t->c)});
      case V::kData:
        return MakeGlobal(t->name);
      case V::kFam:
        return MakeApp(MakeGlobal(t->name), Quote(lvl, MkData(sig_.Family(t->name)->index), t->a));
      default:
        throw Error(ErrorCode::kType, "expected a type");
    }
  }

  ExprPtr QuoteNeutral(int lvl, const Neu& n) {
    switch (n->k) {
      case N::kVar:
        return MakeVar(lvl - n->level - 1);
      case N::kApp:
        return MakeApp(QuoteNeutral(lvl, n->head), Quote(lvl, n->arg_type, n->arg));
      case N::kFst:
        return MakeNode(Node::kFst, {QuoteNeutral(lvl, n->head)});
      case N::kSnd:
        return MakeNode(Node::kSnd, {QuoteNeutral(lvl, n->head)});
      case N::kExfalso:
        return MakeNode(Node::kExfalso, {QuoteType(lvl, n->type), Quote(lvl, n->scrut->type, n->scrut)});
      case N::kJ: {
        Val x = MkVar(lvl, n->a);
        Val y = MkVar(lvl + 1, n->a);
        Val p = MkVar(lvl + 2, MkId(n->a, x, y));
        ExprPtr motive = QuoteType(lvl + 3, Inst(n->motive, {x, y, p}));
        ExprPtr step = Quote(lvl + 1, Inst(n->motive, {x, x, MkRefl(x)}), Inst(n->step, {x}));
        std::vector<std::string> names = n->motive.names;
        names.push_back(n->step.names[0]);
        return MakeNode(Node::kJ,
                        {motive, step, Quote(lvl, n->scrut->type, n->scrut), QuoteType(lvl, n->a),
                         Quote(lvl, n->a, n->t), Quote(lvl, n->a, n->u)},
                        names);
      }
      case N::kCase: {
        ExprPtr scrut = QuoteNeutral(lvl, n->scrut->neu);
        ExprPtr motive, index;
        if (n->family) {
          Val idx_type = MkData(sig_.Family(n->owner)->index);
          Val x = MkVar(lvl, idx_type);
          Val y = MkVar(lvl + 1, MkFam(n->owner, x));
          motive = QuoteType(lvl + 2, Inst(n->motive, {x, y}));
          index = Quote(lvl, idx_type, n->index);
        } else {
          Val y = MkVar(lvl, MkData(n->owner));
          motive = QuoteType(lvl + 1, Inst(n->motive, {y}));
        }
        std::vector<Branch> branches;
        bool eta = !n->branches.empty();
        for (const auto& br : n->branches) {
          Val c = MkCtor(br.constructor);
          Val type = n->family ? Inst(n->motive, {PointOf(br.constructor), c}) : Inst(n->motive, {c});
          ExprPtr body = Quote(lvl, type, Eval(n->env, br.body));
          eta = eta && body->node == Node::kGlobal && body->name == br.constructor;
          branches.push_back({br.constructor, body});
        }
        if (eta) return scrut;
        auto e = std::const_pointer_cast<Expr>(MakeCase(scrut, motive, n->motive.names, std::move(branches)));
        e->kids.push_back(index);
        e->name = n->owner;
        return e;
      }
    }
    throw Error(ErrorCode::kType, "unknown neutral");
  }

  const Signature& sig() const { return sig_; }

 private:
  const Signature& sig_;
  std::map<std::string, Val> defs_;
};

// Checking context.
struct Cx {
  std::vector<std::string> names;
  std::vector<Val> types;
  Env env;
  int lvl() const { return static_cast<int>(env.size()); }
  Cx Bind(const std::string& name, const Val& type) const {
    Cx out = *this;
    out.names.push_back(name);
    out.types.push_back(type);
    out.env.push_back(MkVar(lvl(), type));
    return out;
  }
};

class Checker {
 public:
  explicit Checker(const Signature& sig) : m_(sig), sig_(sig) {}

  Machine& machine() { return m_; }

  Cx FromTelescope(const Telescope& tel) {
    Cx cx;
    for (const auto& b : tel) cx = cx.Bind(b.name, m_.Eval(cx.env, b.type));
    return cx;
  }

  std::string Show(const Cx& cx, const Val& type) { return Print(m_.QuoteType(cx.lvl(), type), cx.names); }

  bool ConvType(const Cx& cx, const Val& a, const Val& b) {
    return AlphaEqual(m_.QuoteType(cx.lvl(), a), m_.QuoteType(cx.lvl(), b));
  }

  bool Conv(const Cx& cx, const Val& type, const Val& a, const Val& b) {
    return AlphaEqual(m_.Quote(cx.lvl(), type, a), m_.Quote(cx.lvl(), type, b));
  }

  ExprPtr CheckType(const Cx& cx, const ExprPtr& e) {
    switch (e->node) {
      case Node::kUnitType:
        return e;
      case Node::kPi:
      case Node::kSigma: {
        ExprPtr a = CheckType(cx, e->kids[0]);
        ExprPtr b = CheckType(cx.Bind(e->binders[0], m_.Eval(cx.env, a)), e->kids[1]);
        return With(e, e->node, {a, b});
      }
      case Node::kId: {
        ExprPtr a = CheckType(cx, e->kids[0]);
        Val av = m_.Eval(cx.env, a);
        return With(e, Node::kId, {a, Check(cx, e->kids[1], av), Check(cx, e->kids[2], av)});
      }
      case Node::kGlobal:
        if (sig_.Data(e->name)) return e;
        if (sig_.Family(e->name)) TypeError(e, "family " + e->name + " needs an index");
        TypeError(e, e->name + " is not a type");
      case Node::kApp:
        if (e->kids[0]->node == Node::kGlobal) {
          if (const auto* f = sig_.Family(e->kids[0]->name)) {
            ExprPtr idx = Check(cx, e->kids[1], MkData(f->index));
            return With(e, Node::kApp, {e->kids[0], idx});
          }
        }
        TypeError(e, "expected a type");
      default:
        TypeError(e, "expected a type, got the term " + Print(e, cx.names));
    }
  }

  ExprPtr Check(const Cx& cx, const ExprPtr& e, const Val& type) {
    switch (e->node) {
      case Node::kLam: {
        if (type->k != V::kPi) TypeError(e, "λ checked against non-function type " + Show(cx, type));
        if (e->kids[0]) {
          Val dom = m_.Eval(cx.env, CheckType(cx, e->kids[0]));
          if (!ConvType(cx, dom, type->a)) {
            TypeError(e, "λ domain " + Show(cx, dom) + " does not match " + Show(cx, type->a));
          }
        }
        Cx inner = cx.Bind(e->binders[0], type->a);
        ExprPtr body = Check(inner, e->kids[1], m_.Inst(type->clo, {inner.env.back()}));
        return With(e, Node::kLam, {m_.QuoteType(cx.lvl(), type->a), body});
      }
      case Node::kPair: {
        if (type->k != V::kSigma) TypeError(e, "pair checked against non-Σ type " + Show(cx, type));
        ExprPtr a = Check(cx, e->kids[0], type->a);
        ExprPtr b = Check(cx, e->kids[1], m_.Inst(type->clo, {m_.Eval(cx.env, a)}));
        return With(e, Node::kPair, {a, b});
      }
      case Node::kUnit:
        if (type->k != V::kUnitType) TypeError(e, "() checked against " + Show(cx, type));
        return e;
      case Node::kRefl: {
        if (type->k != V::kId) TypeError(e, "refl checked against non-identity type " + Show(cx, type));
        ExprPtr w = Check(cx, e->kids[0], type->a);
        Val wv = m_.Eval(cx.env, w);
        if (!Conv(cx, type->a, wv, type->b) || !Conv(cx, type->a, wv, type->c)) {
          TypeError(e, "refl " + Print(w, cx.names) + " does not inhabit " + Show(cx, type));
        }
        return With(e, Node::kRefl, {w});
      }
      case Node::kCase:
        return CheckCase(cx, e, type).first;
      default: {
        auto [term, got] = Infer(cx, e);
        if (!ConvType(cx, got, type)) {
          TypeError(e, "type mismatch: " + Print(e, cx.names) + " has type " + Show(cx, got) +
                           " but " + Show(cx, type) + " was expected");
        }
        return term;
      }
    }
  }

  std::pair<ExprPtr, Val> Infer(const Cx& cx, const ExprPtr& e) {
    switch (e->node) {
      case Node::kVar: {
        int k = cx.lvl() - 1 - e->index;
        if (k < 0) TypeError(e, "unbound variable");
        return {e, cx.types[k]};
      }
      case Node::kGlobal: {
        if (const auto* d = sig_.Def(e->name)) return {e, m_.Eval({}, d->type)};
        if (const auto* c = sig_.Ctor(e->name)) {
          if (c->family) return {e, MkFam(c->owner, m_.PointOf(e->name))};
          return {e, MkData(c->owner)};
        }
        if (sig_.Data(e->name) || sig_.Family(e->name)) TypeError(e, e->name + " is a type, not a term");
        TypeError(e, "unbound name " + e->name);
      }
      case Node::kUnit:
        return {e, Mk(V::kUnitType)};
      case Node::kAnn: {
        ExprPtr t = CheckType(cx, e->kids[1]);
        Val tv = m_.Eval(cx.env, t);
        return {With(e, Node::kAnn, {Check(cx, e->kids[0], tv), t}), tv};
      }
      case Node::kApp: {
        auto [f, ft] = Infer(cx, e->kids[0]);
        if (ft->k != V::kPi) TypeError(e, "applying a term of non-function type " + Show(cx, ft));
        ExprPtr a = Check(cx, e->kids[1], ft->a);
        return {With(e, Node::kApp, {f, a}), m_.Inst(ft->clo, {m_.Eval(cx.env, a)})};
      }
      case Node::kFst:
      case Node::kSnd: {
        auto [p, pt] = Infer(cx, e->kids[0]);
        if (pt->k != V::kSigma) TypeError(e, "projection from non-Σ type " + Show(cx, pt));
        ExprPtr out = With(e, e->node, {p});
        if (e->node == Node::kFst) return {out, pt->a};
        return {out, m_.Inst(pt->clo, {m_.Fst(m_.Eval(cx.env, p))})};
      }
      case Node::kLam: {
        if (!e->kids[0]) TypeError(e, "cannot infer the domain of λ" + e->binders[0] + "; annotate it");
        ExprPtr dom = CheckType(cx, e->kids[0]);
        Val dv = m_.Eval(cx.env, dom);
        Cx inner = cx.Bind(e->binders[0], dv);
        auto [body, bt] = Infer(inner, e->kids[1]);
        ExprPtr cod = m_.QuoteType(inner.lvl(), bt);
        auto pi = std::make_shared<Value>();
        pi->k = V::kPi;
        pi->a = dv;
        pi->clo = {cx.env, cod, {e->binders[0]}};
        return {With(e, Node::kLam, {dom, body}), pi};
      }
      case Node::kPair: {
        auto [a, at] = Infer(cx, e->kids[0]);
        auto [b, bt] = Infer(cx, e->kids[1]);
        auto sigma = std::make_shared<Value>();
        sigma->k = V::kSigma;
        sigma->a = at;
        sigma->clo = {cx.env, Shift(m_.QuoteType(cx.lvl(), bt), 1), {"_"}};
        return {With(e, Node::kPair, {a, b}), sigma};
      }
      case Node::kRefl: {
        auto [w, wt] = Infer(cx, e->kids[0]);
        Val wv = m_.Eval(cx.env, w);
        return {With(e, Node::kRefl, {w}), MkId(wt, wv, wv)};
      }
      case Node::kJ:
        return InferJ(cx, e);
      case Node::kCase:
        return CheckCase(cx, e, nullptr);
      case Node::kExfalso: {
        ExprPtr t = CheckType(cx, e->kids[0]);
        auto [p, pt] = Infer(cx, e->kids[1]);
        if (pt->k != V::kId || pt->b->k != V::kCtor || pt->c->k != V::kCtor || pt->b->name == pt->c->name) {
          TypeError(e, "exfalso needs a proof of Id between distinct constructors, got " + Show(cx, pt));
        }
        return {With(e, Node::kExfalso, {t, p}), m_.Eval(cx.env, t)};
      }
      default:
        TypeError(e, "cannot infer a type for " + Print(e, cx.names) + "; it is a type");
    }
  }

  std::pair<ExprPtr, Val> InferJ(const Cx& cx, const ExprPtr& e) {
    auto [p, pt] = Infer(cx, e->kids[2]);
    if (pt->k != V::kId) TypeError(e, "J eliminates an identity proof, got " + Show(cx, pt));
    Cx m = cx.Bind(e->binders[0], pt->a);
    Val x = m.env.back();
    m = m.Bind(e->binders[1], pt->a);
    Val y = m.env.back();
    m = m.Bind(e->binders[2], MkId(pt->a, x, y));
    ExprPtr motive = CheckType(m, e->kids[0]);
    Closure mc{cx.env, motive, {e->binders[0], e->binders[1], e->binders[2]}};
    Cx h = cx.Bind(e->binders[3], pt->a);
    Val hx = h.env.back();
    ExprPtr step = Check(h, e->kids[1], m_.Inst(mc, {hx, hx, MkRefl(hx)}));
    ExprPtr out = With(e, Node::kJ,
                       {motive, step, p, m_.QuoteType(cx.lvl(), pt->a), m_.Quote(cx.lvl(), pt->a, pt->b),
                        m_.Quote(cx.lvl(), pt->a, pt->c)});
    return {out, m_.Inst(mc, {pt->b, pt->c, m_.Eval(cx.env, p)})};
  }

  // With `expected` null the case must carry a return clause.
  std::pair<ExprPtr, Val> CheckCase(const Cx& cx, const ExprPtr& e, const Val& expected) {
    auto [scrut, st] = Infer(cx, e->kids[0]);
    bool family = st->k == V::kFam;
    if (!family && st->k != V::kData) {
      TypeError(e, "case on a term of type " + Show(cx, st) + ", which is not a data type or family");
    }
    std::string owner = st->name;
    Val idx_type = family ? MkData(sig_.Family(owner)->index) : nullptr;
    std::vector<std::string> binders = family ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"y"};
    ExprPtr motive;
    if (e->kids[1]) {
      std::vector<std::string> given = e->binders;
      ExprPtr raw = e->kids[1];
      if (family && given.size() == 1) {
        raw = Shift(raw, 1, 1);
        given.insert(given.begin(), "x");
      }
      if (given.size() != binders.size()) TypeError(e, "case motive binds the wrong number of names");
      binders = given;
      Cx m = family ? cx.Bind(binders[0], idx_type) : cx.Bind(binders[0], st);
      if (family) m = m.Bind(binders[1], MkFam(owner, m.env.back()));
      motive = CheckType(m, raw);
    } else {
      Val constant = expected;
      if (!constant && !e->branches.empty()) constant = Infer(cx, e->branches[0].body).second;
      if (!constant) TypeError(e, "cannot infer the type of case; add a return clause or annotation");
      motive = Shift(m_.QuoteType(cx.lvl(), constant), static_cast<int>(binders.size()));
    }
    Closure mc{cx.env, motive, binders};
    Val sv = m_.Eval(cx.env, scrut);
    Val idx = family ? st->a : nullptr;
    Val result = family ? m_.Inst(mc, {idx, sv}) : m_.Inst(mc, {sv});
    if (expected && !ConvType(cx, result, expected)) {
      TypeError(e, "case has type " + Show(cx, result) + " but " + Show(cx, expected) + " was expected");
    }

    std::vector<std::string> required;
    if (!family) {
      required = sig_.Data(owner)->constructors;
    } else {
      const auto* f = sig_.Family(owner);
      const auto& points = sig_.PointNames(owner);
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (idx->k == V::kCtor && idx->name != points[i]) continue;
        for (const auto& c : f->points[i].constructors) required.push_back(c);
      }
    }
    std::map<std::string, ExprPtr> given;
    for (const auto& br : e->branches) {
      if (!given.emplace(br.constructor, br.body).second) TypeError(e, "duplicate branch " + br.constructor);
      if (std::find(required.begin(), required.end(), br.constructor) == required.end()) {
        TypeError(e, br.constructor + " is not a constructor of " + Show(cx, st));
      }
    }
    std::vector<Branch> branches;
    for (const auto& c : required) {
      auto it = given.find(c);
      if (it == given.end()) TypeError(e, "missing branch for " + c);
      Val cv = MkCtor(c);
      Val bt = family ? m_.Inst(mc, {m_.PointOf(c), cv}) : m_.Inst(mc, {cv});
      branches.push_back({c, Check(cx, it->second, bt)});
    }
    auto out = std::const_pointer_cast<Expr>(MakeCase(scrut, motive, binders, std::move(branches)));
    out->span = e->span;
    out->name = owner;
    out->kids.push_back(family ? m_.Quote(cx.lvl(), idx_type, idx) : nullptr);
    return {out, result};
  }

 private:
  Machine m_;
  const Signature& sig_;
};

}  // namespace

Signature::Signature() { Add(DataDecl{"Bool", {"tt", "ff"}, {}}); }

void Signature::Load(std::string_view text) {
  for (const auto& d : ParseModule(text)) Add(d);
}

const DataDecl* Signature::Data(const std::string& name) const {
  auto it = data_.find(name);
  return it == data_.end() ? nullptr : &it->second;
}

const FamilyDecl* Signature::Family(const std::string& name) const {
  auto it = families_.find(name);
  return it == families_.end() ? nullptr : &it->second;
}

const Signature::Definition* Signature::Def(const std::string& name) const {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

const Signature::Constructor* Signature::Ctor(const std::string& name) const {
  auto it = ctors_.find(name);
  return it == ctors_.end() ? nullptr : &it->second;
}

const std::vector<std::string>& Signature::PointNames(const std::string& family) const {
  static const std::vector<std::string> kNone;
  auto it = points_.find(family);
  return it == points_.end() ? kNone : it->second;
}

void Signature::Add(const Decl& d) {
  auto taken = [&](const std::string& n) {
    return data_.count(n) || families_.count(n) || defs_.count(n) || ctors_.count(n);
  };
  auto fresh_ctors = [&](const std::vector<std::string>& cs, std::set<std::string>& seen, const Span& at) {
    for (const auto& c : cs) {
      if (taken(c) || !seen.insert(c).second) {
        throw Error(ErrorCode::kDuplicateConstructor, At(at) + "constructor " + c + " is already declared");
      }
    }
  };
  if (const auto* data = std::get_if<DataDecl>(&d)) {
    if (taken(data->name)) throw Error(ErrorCode::kType, At(data->span) + data->name + " is already declared");
    std::set<std::string> seen;
    fresh_ctors(data->constructors, seen, data->span);
    data_[data->name] = *data;
    for (const auto& c : data->constructors) ctors_[c] = {data->name, false, 0};
  } else if (const auto* fam = std::get_if<FamilyDecl>(&d)) {
    if (taken(fam->name)) throw Error(ErrorCode::kType, At(fam->span) + fam->name + " is already declared");
    if (!Data(fam->index)) {
      throw Error(ErrorCode::kType, At(fam->span) + "family index " + fam->index + " is not a data type");
    }
    Checker ch(*this);
    std::vector<std::string> points;
    std::set<std::string> seen;
    for (const auto& p : fam->points) {
      ExprPtr pt = ch.Check(Cx{}, p.point, MkData(fam->index));
      Val v = ch.machine().Eval({}, pt);
      if (v->k != V::kCtor) throw Error(ErrorCode::kType, At(p.point->span) + "family point is not closed");
      if (std::find(points.begin(), points.end(), v->name) != points.end()) {
        throw Error(ErrorCode::kDuplicatePoint, At(p.point->span) + "point " + v->name + " is listed twice");
      }
      points.push_back(v->name);
      fresh_ctors(p.constructors, seen, fam->span);
    }
    families_[fam->name] = *fam;
    points_[fam->name] = points;
    for (std::size_t i = 0; i < fam->points.size(); ++i) {
      for (const auto& c : fam->points[i].constructors) ctors_[c] = {fam->name, true, static_cast<int>(i)};
    }
  } else {
    const auto& def = std::get<DefDecl>(d);
    if (taken(def.name)) throw Error(ErrorCode::kType, At(def.span) + def.name + " is already declared");
    Checker ch(*this);
    ExprPtr type = ch.CheckType(Cx{}, def.type);
    ExprPtr body = ch.Check(Cx{}, def.body, ch.machine().Eval({}, type));
    defs_[def.name] = {type, body};
    def_order_.push_back(def.name);
  }
  decls_.push_back(d);
}

ExprPtr CheckType(const Signature& sig, const Telescope& ctx, const ExprPtr& type) {
  Checker ch(sig);
  return ch.CheckType(ch.FromTelescope(ctx), type);
}

ExprPtr Check(const Signature& sig, const Telescope& ctx, const ExprPtr& term, const ExprPtr& type) {
  Checker ch(sig);
  Cx cx = ch.FromTelescope(ctx);
  ExprPtr t = ch.CheckType(cx, type);
  return ch.Check(cx, term, ch.machine().Eval(cx.env, t));
}

Inferred Infer(const Signature& sig, const Telescope& ctx, const ExprPtr& term) {
  Checker ch(sig);
  Cx cx = ch.FromTelescope(ctx);
  auto [t, type] = ch.Infer(cx, term);
  return {t, ch.machine().QuoteType(cx.lvl(), type)};
}

ExprPtr Normalize(const Signature& sig, const Telescope& ctx, const ExprPtr& term, const ExprPtr& type) {
  Checker ch(sig);
  Cx cx = ch.FromTelescope(ctx);
  Val tv = ch.machine().Eval(cx.env, ch.CheckType(cx, type));
  ExprPtr t = ch.Check(cx, term, tv);
  return ch.machine().Quote(cx.lvl(), tv, ch.machine().Eval(cx.env, t));
}

ExprPtr NormalizeType(const Signature& sig, const Telescope& ctx, const ExprPtr& type) {
  Checker ch(sig);
  Cx cx = ch.FromTelescope(ctx);
  return ch.machine().QuoteType(cx.lvl(), ch.machine().Eval(cx.env, ch.CheckType(cx, type)));
}

bool DefEq(const Signature& sig, const Telescope& ctx, const ExprPtr& t, const ExprPtr& u,
           const ExprPtr& type) {
  return AlphaEqual(Normalize(sig, ctx, t, type), Normalize(sig, ctx, u, type));
}

}  // namespace dttg::dtt
