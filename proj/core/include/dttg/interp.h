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

#ifndef DTTG_INTERP_H_
#define DTTG_INTERP_H_

#include <map>
#include <string>
#include <vector>

#include "dttg/cwf.h"
#include "dttg/dtt.h"

namespace dttg {

// ⟦−⟧ from checked syntax into the game CwF. Data types are one-point
// families over a single-answer base; families are indexed by the flat
// game of their index type.
class Interpreter {
 public:
  Interpreter(const dtt::Signature& sig, Cwf cwf);

  const Cwf& cwf() const { return cwf_; }
  const dtt::Signature& signature() const { return sig_; }
  const FiniteFamily& Family(const std::string& name) const;

  // Telescope types must already be checked.
  ContextGame Context(const dtt::Telescope& ctx);
  TyEntry Type(const dtt::Telescope& ctx, const dtt::ExprPtr& type);
  // Checks the term first.
  Term Interpret(const dtt::Telescope& ctx, const dtt::ExprPtr& term, const dtt::ExprPtr& type);
  Term Definition(const std::string& name);

 private:
  struct Slot {
    TyEntry type;
    std::size_t offset = 0;
    bool hidden = false;
  };
  struct Scope {
    ContextGame ctx;
    std::vector<Slot> slots;
    dtt::Telescope tel;
  };

  Scope FromTelescope(const dtt::Telescope& ctx);
  Scope Bind(const Scope& s, const std::string& name, const TyEntry& a, const dtt::ExprPtr& type) const;
  Scope BindHidden(const Scope& s, const TyEntry& a) const;
  TyEntry Ty(const Scope& s, const dtt::ExprPtr& type);
  Term Tm(const Scope& s, const dtt::ExprPtr& term, const dtt::ExprPtr& type);
  dtt::ExprPtr TypeOf(const Scope& s, const dtt::ExprPtr& term) const;
  Term Var(const Scope& s, int index) const;
  Term Unit(const Scope& s) const;
  Term PointTerm(const ContextGame& g, const TyEntry& a, const std::string& answer) const;
  Term Case(const Scope& s, const dtt::ExprPtr& e);
  Term J(const Scope& s, const dtt::ExprPtr& e);
  Term Exfalso(const Scope& s, const dtt::ExprPtr& e, const dtt::ExprPtr& type);
  // t{⟨id, extra...⟩} for t over s.ctx followed by the extra blocks.
  Term Instantiate(const Scope& s, const Term& t, const std::vector<const Term*>& extra) const;

  const dtt::Signature& sig_;
  Cwf cwf_;
  Game unit_base_;
  std::map<std::string, FiniteFamily> families_;
};

// Both sides are checked at `type` in the empty context.
bool SemanticEqual(Interpreter& in, const dtt::ExprPtr& t, const dtt::ExprPtr& u,
                   const dtt::ExprPtr& type);

}  // namespace dttg

#endif  // DTTG_INTERP_H_
