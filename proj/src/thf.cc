// Copyright 2026 The hammerkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hammerkit/thf.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "hammerkit/names.h"

namespace hammerkit::tptp {

using hol::Term;
using hol::Type;
namespace logic = hol::logic;

Term ground_goal(const Term& goal) {
  hol::TypeSubst subst;
  for (const auto& v : hol::term_type_vars(goal)) subst.emplace(v, Type::app(lower_first(v)));
  return hol::instantiate_types(goal, subst);
}

namespace {

using ConstKey = std::pair<std::string, Type>;

std::string subst_key(const hol::TypeSubst& subst) {
  std::string out;
  for (const auto& [name, ty] : subst) out += name + "=" + ty.to_string() + ";";
  return out;
}

void match_all(const std::vector<ConstKey>& pattern, std::size_t k,
               const std::vector<ConstKey>& goal, hol::TypeSubst& subst,
               std::vector<hol::TypeSubst>& out) {
  if (k == pattern.size()) {
    out.push_back(subst);
    return;
  }
  const Type ty = hol::instantiate(pattern[k].second, subst);
  if (ty.is_ground()) {
    match_all(pattern, k + 1, goal, subst, out);
    return;
  }
  for (const auto& [id, gty] : goal) {
    if (id != pattern[k].first) continue;
    hol::TypeSubst extended = subst;
    if (!hol::match_type(ty, gty, extended)) continue;
    match_all(pattern, k + 1, goal, extended, out);
  }
}

}  // namespace

std::vector<PremiseInstance> monomorphise(const Term& goal,
                                          const std::vector<NamedFormula>& premises,
                                          std::size_t cap) {
  std::vector<ConstKey> goal_consts;
  for (auto& c : hol::constant_occurrences(goal)) {
    if (!logic::is_logical(c.first)) goal_consts.push_back(std::move(c));
  }
  std::vector<PremiseInstance> out;
  for (const auto& p : premises) {
    const std::vector<std::string> tyvars = hol::term_type_vars(p.term);
    if (tyvars.empty()) {
      out.push_back({p.name, 0, {}, p.term});
      continue;
    }
    hol::TypeSubst apart;
    for (const auto& v : tyvars) apart.emplace(v, Type::var("?" + v));
    const Term renamed = hol::instantiate_types(p.term, apart);
    std::vector<ConstKey> pattern;
    for (auto& c : hol::constant_occurrences(renamed)) {
      if (!logic::is_logical(c.first) && !c.second.is_ground()) pattern.push_back(std::move(c));
    }
    std::vector<hol::TypeSubst> found;
    hol::TypeSubst seed;
    match_all(pattern, 0, goal_consts, seed, found);

    std::map<std::string, std::pair<hol::TypeSubst, Term>> unique;
    for (const auto& s : found) {
      hol::TypeSubst own;
      for (const auto& v : tyvars) {
        auto it = s.find("?" + v);
        if (it != s.end()) own.emplace(v, it->second);
      }
      Term inst = hol::instantiate_types(p.term, own);
      if (!hol::term_type_vars(inst).empty()) continue;
      unique.emplace(subst_key(own), std::make_pair(own, inst));
    }
    std::size_t serial = 0;
    for (auto& [key, value] : unique) {
      if (serial == cap) break;
      out.push_back({p.name, serial++, std::move(value.first), std::move(value.second)});
    }
  }
  return out;
}

namespace {

class ThfWriter {
 public:
  // Assigns instance symbols in first-appearance order over `formulas`.
  void scan(const Term& t) {
    for (const auto& [id, ty] : hol::constant_occurrences(t)) {
      if (logic::is_logical(id)) continue;
      scan_type(ty);
      ConstKey key{id, ty};
      if (symbols_.count(key)) continue;
      std::string base = lower_first(mangle(export_name(id)));
      if (base.empty() || !std::islower(static_cast<unsigned char>(base[0]))) base = "c" + base;
      int& seen = seen_[base];
      symbols_.emplace(key, seen == 0 ? base : base + std::to_string(seen - 1));
      bases_.emplace(key, base);
      ++seen;
    }
    scan_vars(t);
  }

  std::vector<std::string> declarations() const {
    std::vector<std::string> out;
    for (const auto& name : types_) {
      out.push_back("thf(t" + name + ", type, " + name + " : $tType).");
    }
    std::vector<std::tuple<std::string, std::string, std::string>> consts;
    for (const auto& [key, sym] : symbols_) consts.emplace_back(bases_.at(key), type(key.second), sym);
    std::sort(consts.begin(), consts.end());
    for (const auto& [base, ty, sym] : consts) {
      out.push_back("thf(c" + sym + ", type, " + sym + " : " + ty + ").");
    }
    return out;
  }

  std::string top(const Term& t) {
    env_.clear();
    used_.clear();
    std::vector<Term> fvs = hol::free_vars(t);
    if (fvs.empty()) return print(t);
    std::string out = binder("!", fvs);
    return out + print(t);
  }

 private:
  void scan_type(const Type& ty) {
    if (ty.is_fun()) {
      scan_type(ty.domain());
      scan_type(ty.codomain());
      return;
    }
    if (ty.is_var() || ty.is_bool() || ty.name() == "ind") return;
    types_.insert(type(ty));
  }

  void scan_vars(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kVar:
        scan_type(t.type());
        return;
      case Term::Kind::kConst:
        return;
      case Term::Kind::kApp:
        scan_vars(t.fn());
        scan_vars(t.arg());
        return;
      case Term::Kind::kAbs:
        scan_vars(t.bound());
        scan_vars(t.body());
        return;
    }
  }

  static std::string type_name(const Type& ty) {
    if (ty.is_var()) return lower_first(mangle(ty.name()));
    std::string joined = ty.name();
    for (const auto& a : ty.args()) joined += "_" + type_name(a);
    return lower_first(mangle(joined));
  }

  static std::string type(const Type& ty) {
    if (ty.is_fun()) return "(" + type(ty.domain()) + " > " + type(ty.codomain()) + ")";
    if (ty.is_bool()) return "$o";
    if (!ty.is_var() && ty.name() == "ind" && ty.args().empty()) return "$i";
    return type_name(ty);
  }

  std::string binder(const char* op, const std::vector<Term>& vars) {
    std::string out = op;
    out += "[";
    for (std::size_t k = 0; k < vars.size(); ++k) {
      std::string base = upper_first(mangle(vars[k].name()));
      if (base.empty() || !std::isupper(static_cast<unsigned char>(base[0]))) base = "V" + base;
      std::string name = base;
      for (int n = 1; used_.count(name); ++n) name = base + std::to_string(n);
      used_.insert(name);
      env_.emplace_back(vars[k], name);
      if (k) out += ",";
      out += name + ":" + type(vars[k].type());
    }
    return out + "]:";
  }

  std::string var_name(const Term& v) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
      if (it->first == v) return it->second;
    }
    return upper_first(mangle(v.name()));
  }

  static const char* connective(const std::string& id) {
    if (id == logic::kConj) return "&";
    if (id == logic::kDisj) return "|";
    if (id == logic::kImp) return "=>";
    if (id == logic::kEq) return "=";
    return nullptr;
  }

  std::string constant(const Term& c) const {
    const std::string& id = c.id();
    if (id == logic::kTrue) return "$true";
    if (id == logic::kFalse) return "$false";
    if (const char* op = connective(id)) return std::string("(") + op + ")";
    if (id == logic::kNeg) return "(~)";
    if (id == logic::kForall) return "(!!)";
    if (id == logic::kExists) return "(?" "?)";
    auto it = symbols_.find({id, c.type()});
    if (it == symbols_.end()) return lower_first(mangle(export_name(id)));
    return it->second;
  }

  std::string quantified(const char* op, const char* id, const Term& t) {
    std::vector<Term> vars;
    Term body = t;
    Term var = t, inner = t;
    while (hol::is_binder_app(body, id, &var, &inner)) {
      vars.push_back(var);
      body = inner;
    }
    std::string out = binder(op, vars);
    out += print(body);
    for (std::size_t k = 0; k < vars.size(); ++k) env_.pop_back();
    return out;
  }

  std::string print(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kVar:
        return var_name(t);
      case Term::Kind::kConst:
        return constant(t);
      case Term::Kind::kAbs: {
        std::vector<Term> vars;
        Term body = t;
        while (body.is_abs()) {
          vars.push_back(body.bound());
          body = body.body();
        }
        std::string out = binder("^", vars);
        out += print(body);
        for (std::size_t k = 0; k < vars.size(); ++k) env_.pop_back();
        return out;
      }
      case Term::Kind::kApp:
        break;
    }
    Term a = t, b = t;
    for (const char* id : {logic::kConj, logic::kDisj, logic::kImp, logic::kEq}) {
      if (hol::is_binary_app(t, id, &a, &b)) {
        return "(" + print(a) + " " + connective(id) + " " + print(b) + ")";
      }
    }
    if (hol::is_unary_app(t, logic::kNeg, &a)) return "~ (" + print(a) + ")";
    if (hol::is_binder_app(t, logic::kForall, nullptr, nullptr)) {
      return quantified("!", logic::kForall, t);
    }
    if (hol::is_binder_app(t, logic::kExists, nullptr, nullptr)) {
      return quantified("?", logic::kExists, t);
    }
    return "(" + print(t.fn()) + " @ " + print(t.arg()) + ")";
  }

  std::map<ConstKey, std::string> symbols_;
  std::map<ConstKey, std::string> bases_;
  std::map<std::string, int> seen_;
  std::set<std::string> types_;
  std::vector<std::pair<Term, std::string>> env_;
  std::set<std::string> used_;
};

}  // namespace

FoProblem export_thf(const Term& goal, const std::vector<NamedFormula>& premises,
                     const hol::Signature&) {
  const Term g = ground_goal(hol::beta_normalize(goal));
  std::vector<NamedFormula> normalized;
  for (const auto& p : premises) normalized.push_back({p.name, hol::beta_normalize(p.term)});
  const std::vector<PremiseInstance> instances = monomorphise(g, normalized);

  ThfWriter writer;
  writer.scan(g);
  for (const auto& inst : instances) writer.scan(inst.term);

  FoProblem out;
  out.format = Format::kThf;
  out.type_decls = writer.declarations();
  std::set<std::string> labels;
  for (const auto& inst : instances) {
    std::string label = axiom_label(inst.premise + "_monomorphized" + std::to_string(inst.serial));
    if (!labels.insert(label).second) continue;
    out.axioms.emplace_back(label, writer.top(inst.term));
    out.premise_labels[label] = inst.premise;
  }
  out.conjecture = {"conjecture", writer.top(g)};
  return out;
}

}  // namespace hammerkit::tptp
