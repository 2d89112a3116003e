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

#include "hammerkit/translate.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "hammerkit/names.h"
#include "hammerkit/thf.h"

namespace hammerkit::tptp {

using hol::Term;
using hol::Type;
namespace logic = hol::logic;

std::string format_name(Format format) {
  switch (format) {
    case Format::kFof:
      return "fof";
    case Format::kTff1:
      return "tff1";
    case Format::kThf:
      return "thf";
  }
  return "?";
}

Format parse_format(const std::string& name) {
  if (name == "fof") return Format::kFof;
  if (name == "tff1" || name == "tff") return Format::kTff1;
  if (name == "thf") return Format::kThf;
  throw std::invalid_argument("unknown TPTP format: " + name);
}

namespace {

// How a term at formula position is rendered.
enum class Shape { kBin, kIff, kNot, kQuant, kEq, kAtom };

struct Classified {
  Shape shape = Shape::kAtom;
  const char* op = "";
  Term a, b;  // operands; for kQuant the bound variable and the body
};

bool is_quantifier_app(const Term& t, const char** op) {
  if (!t.is_app()) return false;
  if (hol::is_const(t.fn(), logic::kForall)) {
    *op = "!";
    return true;
  }
  if (hol::is_const(t.fn(), logic::kExists)) {
    *op = "?";
    return true;
  }
  return false;
}

bool formula_shaped(const Term& t) {
  const char* op;
  return hol::is_binary_app(t, logic::kConj, nullptr, nullptr) ||
         hol::is_binary_app(t, logic::kDisj, nullptr, nullptr) ||
         hol::is_binary_app(t, logic::kImp, nullptr, nullptr) ||
         hol::is_binary_app(t, logic::kEq, nullptr, nullptr) ||
         hol::is_unary_app(t, logic::kNeg, nullptr) || is_quantifier_app(t, &op);
}

Classified classify(const Term& t) {
  Classified c{Shape::kAtom, "", t, t};
  if (hol::is_binary_app(t, logic::kConj, &c.a, &c.b)) {
    c.shape = Shape::kBin;
    c.op = "&";
  } else if (hol::is_binary_app(t, logic::kDisj, &c.a, &c.b)) {
    c.shape = Shape::kBin;
    c.op = "|";
  } else if (hol::is_binary_app(t, logic::kImp, &c.a, &c.b)) {
    c.shape = Shape::kBin;
    c.op = "=>";
  } else if (hol::is_unary_app(t, logic::kNeg, &c.a)) {
    c.shape = Shape::kNot;
  } else if (is_quantifier_app(t, &c.op)) {
    c.shape = Shape::kQuant;
    if (t.arg().is_abs()) {
      c.a = t.arg().bound();
      c.b = t.arg().body();
    } else {
      c.a = t.arg();  // eta-expanded by the lifter
    }
  } else if (hol::is_binary_app(t, logic::kEq, &c.a, &c.b)) {
    const bool iff = c.a.type().is_bool() && (formula_shaped(c.a) || formula_shaped(c.b));
    c.shape = iff ? Shape::kIff : Shape::kEq;
    c.op = iff ? "<=>" : "=";
  }
  return c;
}

Term rebuild_binary(const Term& t, const Term& a, const Term& b) {
  return Term::app(Term::app(t.fn().fn(), a), b);
}

Term rebuild_quant(const Term& t, const Term& var, const Term& body) {
  return Term::app(t.fn(), Term::abs(var, body));
}

Term fresh_var(const std::string& base, const Type& ty, const std::vector<Term>& avoid) {
  auto taken = [&](const std::string& name) {
    return std::any_of(avoid.begin(), avoid.end(),
                       [&](const Term& v) { return v.name() == name; });
  };
  if (!taken(base)) return Term::var(base, ty);
  for (int k = 0;; ++k) {
    std::string name = base + std::to_string(k);
    if (!taken(name)) return Term::var(name, ty);
  }
}

class Lifter {
 public:
  explicit Lifter(const hol::Signature& sig) : sig_(sig) {}

  Term formula(const Term& t) {
    Classified c = classify(t);
    switch (c.shape) {
      case Shape::kBin:
      case Shape::kIff:
        return rebuild_binary(t, formula(c.a), formula(c.b));
      case Shape::kNot:
        return Term::app(t.fn(), formula(c.a));
      case Shape::kQuant: {
        if (!t.arg().is_abs()) {
          const Term& pred = t.arg();
          Term x = fresh_var("x", pred.type().domain(), hol::free_vars(pred));
          return formula(Term::app(t.fn(), Term::abs(x, Term::app(pred, x))));
        }
        return rebuild_quant(t, c.a, formula(c.b));
      }
      case Shape::kEq:
        return rebuild_binary(t, term(c.a), term(c.b));
      case Shape::kAtom:
        return term(t);
    }
    return t;
  }

  Term term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kVar:
      case Term::Kind::kConst:
        return t;
      case Term::Kind::kApp:
        return Term::app(term(t.fn()), term(t.arg()));
      case Term::Kind::kAbs:
        return lift(t);
    }
    return t;
  }

  std::vector<LiftedDef> take_defs() { return std::move(defs_); }

 private:
  Term lift(const Term& abs) {
    std::vector<Term> xs;
    Term body = abs;
    while (body.is_abs()) {
      Term bound = body.bound();
      Term inner = body.body();
      if (std::find(xs.begin(), xs.end(), bound) != xs.end()) {
        std::vector<Term> avoid = xs;
        for (const auto& v : hol::free_vars(inner)) avoid.push_back(v);
        Term fresh = fresh_var(bound.name(), bound.type(), avoid);
        inner = hol::substitute(inner, bound, fresh);
        bound = fresh;
      }
      xs.push_back(bound);
      body = inner;
    }
    const bool as_formula = body.type().is_bool() && formula_shaped(body);
    Term lifted_body = as_formula ? formula(body) : term(body);

    Term closed = lifted_body;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) closed = Term::abs(*it, closed);
    std::vector<Term> fvs = hol::free_vars(closed);
    Term key_term = closed;
    for (auto it = fvs.rbegin(); it != fvs.rend(); ++it) key_term = Term::abs(*it, key_term);
    const std::string key = hol::print_term(key_term);

    auto found = by_key_.find(key);
    if (found == by_key_.end()) {
      std::string id;
      do {
        id = "lift" + std::to_string(counter_++);
      } while (sig_.has_id(id));
      Term constant = Term::constant(id, id, key_term.type());
      std::vector<Term> all = fvs;
      all.insert(all.end(), xs.begin(), xs.end());
      Term equation = hol::list_mk_forall(all, hol::mk_eq(Term::app(constant, all), lifted_body));
      defs_.push_back(LiftedDef{id, constant, equation});
      found = by_key_.emplace(key, defs_.size() - 1).first;
    }
    return Term::app(defs_[found->second].constant, fvs);
  }

  const hol::Signature& sig_;
  std::vector<LiftedDef> defs_;
  std::map<std::string, std::size_t> by_key_;
  int counter_ = 0;
};

}  // namespace

LiftResult lambda_lift(const Term& goal, const std::vector<NamedFormula>& premises,
                       const hol::Signature& sig) {
  Lifter lifter(sig);
  LiftResult out{lifter.formula(goal), {}, {}};
  for (const auto& p : premises) out.premises.push_back({p.name, lifter.formula(p.term)});
  out.defs = lifter.take_defs();
  return out;
}

Term apply_constant(const Type& domain, const Type& codomain) {
  Type fn = Type::fun(domain, codomain);
  return Term::constant(kApplyId, kApplyId, Type::fun(fn, fn));
}

namespace {

class ApplyIntroducer {
 public:
  void count_formula(const Term& t) {
    Classified c = classify(t);
    switch (c.shape) {
      case Shape::kBin:
      case Shape::kIff:
        count_formula(c.a);
        count_formula(c.b);
        return;
      case Shape::kNot:
        count_formula(c.a);
        return;
      case Shape::kQuant:
        require_abs(t);
        count_formula(c.b);
        return;
      case Shape::kEq:
        count_term(c.a);
        count_term(c.b);
        return;
      case Shape::kAtom:
        count_term(t);
        return;
    }
  }

  Term rewrite_formula(const Term& t) {
    Classified c = classify(t);
    switch (c.shape) {
      case Shape::kBin:
      case Shape::kIff:
        return rebuild_binary(t, rewrite_formula(c.a), rewrite_formula(c.b));
      case Shape::kNot:
        return Term::app(t.fn(), rewrite_formula(c.a));
      case Shape::kQuant:
        return rebuild_quant(t, c.a, rewrite_formula(c.b));
      case Shape::kEq:
        return rebuild_binary(t, rewrite_term(c.a), rewrite_term(c.b));
      case Shape::kAtom:
        return rewrite_term(t);
    }
    return t;
  }

  ArityMap& arity() { return arity_; }

 private:
  static void require_abs(const Term& t) {
    if (!t.arg().is_abs()) throw NotFirstOrder("quantifier over a non-abstraction");
  }

  void count_term(const Term& t) {
    auto [head, args] = hol::strip_comb(t);
    if (head.is_abs()) throw NotFirstOrder("abstraction left after lambda lifting");
    if (head.is_const()) {
      auto [it, inserted] = arity_.emplace(head.id(), args.size());
      if (!inserted) it->second = std::min(it->second, args.size());
    }
    for (const auto& a : args) count_term(a);
  }

  Term rewrite_term(const Term& t) {
    auto [head, args] = hol::strip_comb(t);
    std::size_t direct = 0;
    Term acc = head;
    if (head.is_const()) direct = arity_.at(head.id());
    for (std::size_t i = 0; i < args.size(); ++i) {
      Term arg = rewrite_term(args[i]);
      if (i < direct) {
        acc = Term::app(acc, arg);
      } else {
        const Type& fty = acc.type();
        acc = Term::app(apply_constant(fty.domain(), fty.codomain()), {acc, arg});
      }
    }
    return acc;
  }

  ArityMap arity_;
};

}  // namespace

ApplyResult introduce_apply(const std::vector<Term>& formulas) {
  ApplyIntroducer intro;
  for (const auto& f : formulas) intro.count_formula(f);
  ApplyResult out;
  for (const auto& f : formulas) out.terms.push_back(intro.rewrite_formula(f));
  out.arity = std::move(intro.arity());
  return out;
}

const std::vector<HelperAxiom>& helper_axioms() {
  static const std::vector<HelperAxiom> kHelpers = [] {
    const Type a = Type::var("A");
    const Type b = Type::var("B");
    const Type ab = Type::fun(a, b);
    const Term f = Term::var("f", ab);
    const Term g = Term::var("g", ab);
    const Term x = Term::var("x", a);
    const Term eq_ext = hol::mk_forall(
        f, hol::mk_forall(g, hol::mk_imp(hol::mk_forall(x, hol::mk_eq(Term::app(f, x),
                                                                     Term::app(g, x))),
                                         hol::mk_eq(f, g))));
    const Term t = Term::var("t", Type::boolean());
    const Term bool_cases = hol::mk_forall(
        t, hol::Term::app(hol::Term::app(hol::Term::constant(logic::kDisj, logic::kDisj,
                                                             hol::logical_constant_types().at(
                                                                 logic::kDisj)),
                                         hol::mk_eq(t, hol::mk_true())),
                          hol::mk_eq(t, hol::mk_false())));
    const Term not_weak = hol::mk_eq(hol::mk_neg(hol::mk_false()), hol::mk_true());
    return std::vector<HelperAxiom>{
        {"EQ_EXT", eq_ext},
        {"BOOL_CASES_AX", bool_cases},
        {"NOT_CLAUSES_WEAK_conjunct1", not_weak},
        {"TRUTH", hol::mk_true()},
    };
  }();
  return kHelpers;
}

namespace {

// Prints apply-introduced HOL formulas in FOF or TFF1 syntax.
class FoWriter {
 public:
  FoWriter(Format format, const hol::Signature& sig, const std::vector<LiftedDef>& defs,
           const ArityMap& arity)
      : typed_(format == Format::kTff1), sig_(sig), arity_(arity) {
    for (const auto& d : defs) general_.emplace(d.id, d.constant.type());
    general_.emplace(kApplyId, apply_constant(Type::var("A"), Type::var("B")).type());
  }

  // Registers symbols and type constructors; call for every formula first.
  void scan(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kVar:
        scan_type(t.type());
        return;
      case Term::Kind::kConst:
        scan_type(t.type());
        if (!hol::logic::is_logical(t.id()) || arity_.count(t.id())) {
          if (arity_.count(t.id())) {
            const_ids_.insert(t.id());
            scan_type(general_type(t.id(), t.type()));
          }
        }
        return;
      case Term::Kind::kApp:
        scan(t.fn());
        scan(t.arg());
        return;
      case Term::Kind::kAbs:
        scan(t.bound());
        scan(t.body());
        return;
    }
  }

  void assign_symbols() {
    tycons_.insert("bool");
    tycons_.insert("fun");
    std::set<std::string> used = {"p", "i", "s"};
    for (const auto& con : tycons_) {
      std::string sym = type_symbol_base(con);
      while (used.count(sym)) sym += "t";
      used.insert(sym);
      type_symbol_[con] = sym;
    }
    symbol_[kApplyId] = "i";
    for (const auto& id : const_ids_) {
      if (id == kApplyId) continue;
      std::string sym = lower_first(mangle(export_name(id)));
      if (sym.empty() || !std::islower(static_cast<unsigned char>(sym[0]))) sym = "c" + sym;
      while (used.count(sym)) sym += "c";
      used.insert(sym);
      symbol_[id] = sym;
    }
  }

  std::vector<std::string> declarations() const {
    std::vector<std::string> out;
    for (const auto& con : tycons_) {
      int arity = 0;
      if (auto a = sig_.tycon_arity(con)) arity = *a;
      if (auto it = observed_arity_.find(con); it != observed_arity_.end()) arity = it->second;
      std::string kind = "$tType";
      if (arity == 1) {
        kind = "$tType > $tType";
      } else if (arity > 1) {
        kind = "($tType";
        for (int k = 1; k < arity; ++k) kind += " * $tType";
        kind += ") > $tType";
      }
      out.push_back("tff(t" + mangle(con) + ", type, " + type_symbol_.at(con) + ":" + kind +
                    ").");
    }
    out.push_back("tff(cp, type, p : (bool > $o)).");
    out.push_back(const_decl(kApplyId));
    std::vector<std::pair<std::string, std::string>> rest;
    for (const auto& id : const_ids_) {
      if (id != kApplyId) rest.emplace_back(symbol_.at(id), id);
    }
    std::sort(rest.begin(), rest.end());
    for (const auto& entry : rest) out.push_back(const_decl(entry.second));
    std::set<std::string> labels;
    for (auto& line : out) {
      const std::size_t open = line.find('(') + 1;
      const std::size_t comma = line.find(',', open);
      std::string label = line.substr(open, comma - open);
      if (labels.insert(label).second) continue;
      while (!labels.insert(label).second) label += "c";
      line = line.substr(0, open) + label + line.substr(comma);
    }
    return out;
  }

  std::string top(const Term& t) {
    env_.clear();
    used_.clear();
    tyvar_names_.clear();
    std::vector<std::string> tyvars = hol::term_type_vars(t);
    std::vector<std::string> tv_names;
    for (const auto& v : tyvars) {
      std::string name = unique(upper_first(mangle(v)));
      tyvar_names_[v] = name;
      tv_names.push_back(name);
    }
    std::string body;
    std::vector<Term> fvs = hol::free_vars(t);
    if (!fvs.empty()) {
      body = quantifier("!", fvs);
      body += formula(t);
      for (std::size_t k = 0; k < fvs.size(); ++k) env_.pop_back();
    } else {
      body = formula(t);
    }
    if (tv_names.empty()) return body;
    std::string prefix = "![";
    for (std::size_t k = 0; k < tv_names.size(); ++k) {
      if (k) prefix += ",";
      prefix += typed_ ? tv_names[k] + " : $tType" : tv_names[k];
    }
    prefix += typed_ ? "]:" : "]: ";
    return prefix + body;
  }

 private:
  std::string type_symbol_base(const std::string& con) const {
    if (con == "fun") return typed_ ? "fn" : "fun";
    std::string sym = lower_first(mangle(con));
    if (sym.empty() || !std::islower(static_cast<unsigned char>(sym[0]))) sym = "t" + sym;
    return sym;
  }

  void scan_type(const Type& ty) {
    if (ty.is_var()) return;
    tycons_.insert(ty.name());
    observed_arity_[ty.name()] = static_cast<int>(ty.args().size());
    for (const auto& a : ty.args()) scan_type(a);
  }

  Type general_type(const std::string& id, const Type& fallback) const {
    if (auto it = general_.find(id); it != general_.end()) return it->second;
    if (const hol::ConstDecl* decl = sig_.find_id(id)) return decl->type;
    if (auto it = hol::logical_constant_types().find(id);
        it != hol::logical_constant_types().end()) {
      return it->second;
    }
    return fallback;
  }

  std::string const_decl(const std::string& id) const {
    const Type general = general_type(id, Type::boolean());
    const std::size_t n = id == kApplyId ? 2 : arity_.count(id) ? arity_.at(id) : 0;
    auto [doms, result] = hol::strip_fun(general, n);
    std::string core;
    if (doms.empty()) {
      core = raw_type(general);
    } else if (doms.size() == 1) {
      core = "(" + raw_type(doms[0]) + " > " + raw_type(result) + ")";
    } else {
      core = "((";
      for (std::size_t k = 0; k < doms.size(); ++k) {
        if (k) core += " * ";
        core += raw_type(doms[k]);
      }
      core += ") > " + raw_type(result) + ")";
    }
    std::vector<std::string> tvs = general.type_vars();
    std::string text = core;
    if (!tvs.empty()) {
      std::string prefix = "!>[";
      for (std::size_t k = 0; k < tvs.size(); ++k) {
        if (k) prefix += ",";
        prefix += mangle(tvs[k]) + ":$tType";
      }
      text = prefix + "]: " + core;
    }
    return "tff(c" + mangle(export_name(id)) + ", type, " + symbol_.at(id) + ":" + text + ").";
  }

  // Type printed with declaration-local type variable names.
  std::string raw_type(const Type& ty) const {
    if (ty.is_var()) return mangle(ty.name());
    std::string out = type_symbol_.at(ty.name());
    if (ty.args().empty()) return out;
    out += "(";
    for (std::size_t k = 0; k < ty.args().size(); ++k) {
      if (k) out += ",";
      out += raw_type(ty.args()[k]);
    }
    return out + ")";
  }

  std::string type(const Type& ty) const {
    if (ty.is_var()) {
      auto it = tyvar_names_.find(ty.name());
      return it == tyvar_names_.end() ? mangle(ty.name()) : it->second;
    }
    std::string out = type_symbol_.at(ty.name());
    if (ty.args().empty()) return out;
    out += "(";
    for (std::size_t k = 0; k < ty.args().size(); ++k) {
      if (k) out += ",";
      out += type(ty.args()[k]);
    }
    return out + ")";
  }

  std::string unique(std::string base) {
    if (base.empty() || !std::isupper(static_cast<unsigned char>(base[0]))) base = "V" + base;
    std::string name = base;
    for (int k = 1; used_.count(name); ++k) name = base + std::to_string(k);
    used_.insert(name);
    return name;
  }

  std::string quantifier(const char* op, const std::vector<Term>& vars) {
    std::string out = op;
    out += "[";
    for (std::size_t k = 0; k < vars.size(); ++k) {
      std::string name = unique(upper_first(mangle(vars[k].name())));
      env_.emplace_back(vars[k], name);
      if (k) out += typed_ ? "," : ", ";
      out += name;
      if (typed_) out += ":" + type(vars[k].type());
    }
    out += typed_ ? "]:" : "]: ";
    return out;
  }

  std::string formula(const Term& t) {
    Classified c = classify(t);
    switch (c.shape) {
      case Shape::kBin:
      case Shape::kIff:
        return "(" + formula(c.a) + " " + c.op + " " + formula(c.b) + ")";
      case Shape::kNot: {
        Shape inner = classify(c.a).shape;
        std::string body = formula(c.a);
        if (inner == Shape::kBin || inner == Shape::kIff) return "~ " + body;
        return "~ (" + body + ")";
      }
      case Shape::kQuant: {
        if (!t.arg().is_abs()) throw NotFirstOrder("quantifier over a non-abstraction");
        const char* op = c.op;
        std::vector<Term> vars{c.a};
        Term body = c.b;
        for (;;) {
          Classified next = classify(body);
          if (next.shape != Shape::kQuant || std::string(next.op) != op ||
              !body.arg().is_abs()) {
            break;
          }
          vars.push_back(next.a);
          body = next.b;
        }
        std::string out = quantifier(op, vars);
        out += formula(body);
        for (std::size_t k = 0; k < vars.size(); ++k) env_.pop_back();
        return out;
      }
      case Shape::kEq:
        return term(c.a) + " = " + term(c.b);
      case Shape::kAtom:
        return "p(" + term(t) + ")";
    }
    return {};
  }

  std::string var_name(const Term& v) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
      if (it->first == v) return it->second;
    }
    throw NotFirstOrder("unbound variable " + v.name());
  }

  std::string tag(const Type& ty, const std::string& inner) const {
    if (typed_) return inner;
    return "s(" + type(ty) + "," + inner + ")";
  }

  std::string term(const Term& t) {
    auto [head, args] = hol::strip_comb(t);
    if (head.is_var()) {
      if (!args.empty()) throw NotFirstOrder("variable applied without apply functor");
      return tag(t.type(), var_name(head));
    }
    if (!head.is_const()) throw NotFirstOrder("abstraction at term position");
    if (head.id() == kApplyId) {
      if (args.size() != 2) throw NotFirstOrder("apply functor with wrong arity");
      const Type& fty = args[0].type();
      if (typed_) {
        return "i(" + type(fty.domain()) + "," + type(fty.codomain()) + "," + term(args[0]) +
               "," + term(args[1]) + ")";
      }
      return tag(t.type(), "i(" + term(args[0]) + "," + term(args[1]) + ")");
    }
    auto sym = symbol_.find(head.id());
    if (sym == symbol_.end()) throw NotFirstOrder("constant at formula position: " + head.id());
    std::vector<std::string> parts;
    if (typed_) {
      const Type general = general_type(head.id(), head.type());
      hol::TypeSubst subst;
      hol::match_type(general, head.type(), subst);
      for (const auto& v : general.type_vars()) {
        auto it = subst.find(v);
        parts.push_back(type(it == subst.end() ? Type::var(v) : it->second));
      }
    }
    for (const auto& a : args) parts.push_back(term(a));
    std::string inner = sym->second;
    if (!parts.empty()) {
      inner += "(";
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) inner += ",";
        inner += parts[k];
      }
      inner += ")";
    }
    return tag(t.type(), inner);
  }

  bool typed_;
  const hol::Signature& sig_;
  const ArityMap& arity_;
  std::map<std::string, Type> general_;
  std::set<std::string> tycons_;
  std::map<std::string, int> observed_arity_;
  std::set<std::string> const_ids_;
  std::map<std::string, std::string> type_symbol_;
  std::map<std::string, std::string> symbol_;

  std::vector<std::pair<Term, std::string>> env_;
  std::set<std::string> used_;
  std::map<std::string, std::string> tyvar_names_;
};

FoProblem export_first_order(Format format, const Term& goal,
                             const std::vector<NamedFormula>& premises,
                             const std::vector<LiftedDef>& defs, const hol::Signature& sig) {
  struct Entry {
    std::string label;
    std::string premise;  // empty for helpers and definitions
    Term term;
  };
  std::vector<Entry> entries;
  std::set<std::string> labels;
  auto add = [&](const std::string& name, const Term& term, bool is_premise) {
    std::string label = axiom_label(name);
    if (!labels.insert(label).second) return;
    entries.push_back({label, is_premise ? name : std::string(), term});
  };
  // Premise labels win over helper labels of the same name.
  for (const auto& p : premises) labels.insert(axiom_label(p.name));
  const auto& helpers = helper_axioms();
  for (std::size_t k = 0; k + 1 < helpers.size(); ++k) add(helpers[k].name, helpers[k].term, false);
  for (const auto& p : premises) {
    labels.erase(axiom_label(p.name));
    add(p.name, p.term, true);
  }
  for (const auto& d : defs) add(d.id, d.equation, false);
  add(helpers.back().name, helpers.back().term, false);

  std::vector<Term> formulas;
  for (const auto& e : entries) formulas.push_back(e.term);
  formulas.push_back(goal);
  ApplyResult applied = introduce_apply(formulas);

  FoWriter writer(format, sig, defs, applied.arity);
  for (const auto& f : applied.terms) writer.scan(f);
  writer.assign_symbols();

  FoProblem out;
  out.format = format;
  if (format == Format::kTff1) out.type_decls = writer.declarations();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    out.axioms.emplace_back(entries[k].label, writer.top(applied.terms[k]));
    if (!entries[k].premise.empty()) out.premise_labels[entries[k].label] = entries[k].premise;
  }
  out.conjecture = {"conjecture", writer.top(applied.terms.back())};
  return out;
}

}  // namespace

FoProblem export_fof(const Term& goal, const std::vector<NamedFormula>& premises,
                     const std::vector<LiftedDef>& defs, const hol::Signature& sig) {
  return export_first_order(Format::kFof, goal, premises, defs, sig);
}

FoProblem export_tff1(const Term& goal, const std::vector<NamedFormula>& premises,
                      const std::vector<LiftedDef>& defs, const hol::Signature& sig) {
  return export_first_order(Format::kTff1, goal, premises, defs, sig);
}

std::string FoProblem::serialize() const {
  const char* lang = format == Format::kFof ? "fof" : format == Format::kTff1 ? "tff" : "thf";
  std::ostringstream out;
  for (const auto& d : type_decls) out << d << '\n';
  for (const auto& [label, text] : axioms) {
    out << lang << '(' << label << ", axiom, " << text << ").\n";
  }
  out << lang << '(' << conjecture.first << ", conjecture, " << conjecture.second << ").\n";
  return out.str();
}

FoProblem translate(Format format, const Term& goal, const std::vector<NamedFormula>& premises,
                    const hol::Signature& sig) {
  Term g = hol::beta_normalize(goal);
  std::vector<NamedFormula> ps;
  ps.reserve(premises.size());
  for (const auto& p : premises) ps.push_back({p.name, hol::beta_normalize(p.term)});
  if (format == Format::kThf) return export_thf(g, ps, sig);
  LiftResult lifted = lambda_lift(g, ps, sig);
  return export_first_order(format, lifted.goal, lifted.premises, lifted.defs, sig);
}

}  // namespace hammerkit::tptp
