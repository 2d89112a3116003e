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

#include "hammerkit/hol.h"

#include <algorithm>
#include <cstring>

namespace hammerkit::hol {

// ---------------------------------------------------------------------------
// Types

Type Type::var(std::string name) {
  return Type(std::make_shared<const Node>(Node{true, std::move(name), {}}));
}

Type Type::app(std::string constructor, std::vector<Type> args) {
  return Type(std::make_shared<const Node>(
      Node{false, std::move(constructor), std::move(args)}));
}

Type Type::fun(Type domain, Type codomain) {
  return app("fun", {std::move(domain), std::move(codomain)});
}

Type Type::boolean() {
  static const Type kBool = app("bool");
  return kBool;
}

Type Type::ind() {
  static const Type kInd = app("ind");
  return kInd;
}

bool Type::is_fun() const {
  return !is_var() && name() == "fun" && args().size() == 2;
}

bool Type::is_bool() const {
  return !is_var() && name() == "bool" && args().empty();
}

const Type& Type::domain() const {
  if (!is_fun()) throw TypeError("not a function type: " + to_string());
  return args()[0];
}

const Type& Type::codomain() const {
  if (!is_fun()) throw TypeError("not a function type: " + to_string());
  return args()[1];
}

void Type::collect_type_vars(std::vector<std::string>& out) const {
  if (is_var()) {
    if (std::find(out.begin(), out.end(), name()) == out.end()) out.push_back(name());
    return;
  }
  for (const auto& a : args()) a.collect_type_vars(out);
}

std::vector<std::string> Type::type_vars() const {
  std::vector<std::string> out;
  collect_type_vars(out);
  return out;
}

bool Type::is_ground() const {
  if (is_var()) return false;
  return std::all_of(args().begin(), args().end(),
                     [](const Type& a) { return a.is_ground(); });
}

int Type::compare(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return 0;
  if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
  if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
  const auto& xs = a.args();
  const auto& ys = b.args();
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    if (int c = compare(xs[i], ys[i]); c != 0) return c;
  }
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  return 0;
}

std::string Type::to_string() const {
  if (is_var() || args().empty()) return name();
  std::string out = "(" + name();
  for (const auto& a : args()) {
    out += ' ';
    out += a.to_string();
  }
  out += ')';
  return out;
}

Type instantiate(const Type& ty, const TypeSubst& subst) {
  if (subst.empty()) return ty;
  if (ty.is_var()) {
    auto it = subst.find(ty.name());
    return it == subst.end() ? ty : it->second;
  }
  if (ty.args().empty()) return ty;
  std::vector<Type> args;
  args.reserve(ty.args().size());
  for (const auto& a : ty.args()) args.push_back(instantiate(a, subst));
  return Type::app(ty.name(), std::move(args));
}

bool match_type(const Type& pattern, const Type& target, TypeSubst& subst) {
  if (pattern.is_var()) {
    auto [it, inserted] = subst.emplace(pattern.name(), target);
    return inserted || it->second == target;
  }
  if (target.is_var() || pattern.name() != target.name() ||
      pattern.args().size() != target.args().size()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.args().size(); ++i) {
    if (!match_type(pattern.args()[i], target.args()[i], subst)) return false;
  }
  return true;
}

Type fun_type(const std::vector<Type>& domains, const Type& result) {
  Type out = result;
  for (auto it = domains.rbegin(); it != domains.rend(); ++it) out = Type::fun(*it, out);
  return out;
}

std::pair<std::vector<Type>, Type> strip_fun(const Type& ty, std::size_t max_args) {
  std::vector<Type> doms;
  Type cur = ty;
  while (doms.size() < max_args && cur.is_fun()) {
    doms.push_back(cur.domain());
    cur = cur.codomain();
  }
  return {std::move(doms), cur};
}

namespace logic {
bool is_logical(const std::string& name) {
  static const char* const kNames[] = {kEq,     kConj,   kDisj, kImp,  kNeg,
                                       kForall, kExists, kTrue, kFalse};
  return std::any_of(std::begin(kNames), std::end(kNames),
                     [&](const char* n) { return name == n; });
}
}  // namespace logic

const std::map<std::string, Type>& logical_constant_types() {
  static const std::map<std::string, Type> kTypes = [] {
    const Type a = Type::var("A");
    const Type b = Type::boolean();
    const Type bbb = Type::fun(b, Type::fun(b, b));
    const Type pred = Type::fun(a, b);
    return std::map<std::string, Type>{
        {logic::kEq, Type::fun(a, Type::fun(a, b))},
        {logic::kConj, bbb},
        {logic::kDisj, bbb},
        {logic::kImp, bbb},
        {logic::kNeg, Type::fun(b, b)},
        {logic::kForall, Type::fun(pred, b)},
        {logic::kExists, Type::fun(pred, b)},
        {logic::kTrue, b},
        {logic::kFalse, b},
        {logic::kSelect, Type::fun(pred, a)},
    };
  }();
  return kTypes;
}

// ---------------------------------------------------------------------------
// Terms

Term Term::var(std::string name, Type ty) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kVar, std::move(ty), std::move(name), {}, {}}));
}

Term Term::constant(std::string name, std::string id, Type ty) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kConst, std::move(ty), std::move(name), std::move(id), {}}));
}

Term Term::app(Term fn, Term arg) {
  const Type& fty = fn.type();
  if (!fty.is_fun()) {
    throw TypeError("cannot apply a term of non-function type " + fty.to_string());
  }
  if (fty.domain() != arg.type()) {
    throw TypeError("argument type mismatch: expected " + fty.domain().to_string() +
                    ", got " + arg.type().to_string());
  }
  Type result = fty.codomain();
  return Term(std::make_shared<const Node>(
      Node{Kind::kApp, std::move(result), {}, {}, {std::move(fn), std::move(arg)}}));
}

Term Term::app(Term fn, const std::vector<Term>& args) {
  for (const auto& a : args) fn = app(std::move(fn), a);
  return fn;
}

Term Term::abs(Term bound, Term body) {
  if (!bound.is_var()) throw TypeError("abstraction over a non-variable");
  Type ty = Type::fun(bound.type(), body.type());
  return Term(std::make_shared<const Node>(
      Node{Kind::kAbs, std::move(ty), {}, {}, {std::move(bound), std::move(body)}}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kVar:
      return a.name() == b.name() && a.type() == b.type();
    case Term::Kind::kConst:
      return a.id() == b.id() && a.type() == b.type();
    case Term::Kind::kApp:
    case Term::Kind::kAbs:
      return a.node_->children[0] == b.node_->children[0] &&
             a.node_->children[1] == b.node_->children[1];
  }
  return false;
}

bool Term::VarLess::operator()(const Term& a, const Term& b) const {
  if (a.name() != b.name()) return a.name() < b.name();
  return a.type() < b.type();
}

std::pair<Term, std::vector<Term>> strip_comb(const Term& t) {
  std::vector<Term> args;
  Term cur = t;
  while (cur.is_app()) {
    args.push_back(cur.arg());
    cur = cur.fn();
  }
  std::reverse(args.begin(), args.end());
  return {cur, std::move(args)};
}

namespace {

void collect_free(const Term& t, std::vector<Term>& bound, std::vector<Term>& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      if (std::find(bound.begin(), bound.end(), t) == bound.end() &&
          std::find(out.begin(), out.end(), t) == out.end()) {
        out.push_back(t);
      }
      return;
    case Term::Kind::kConst:
      return;
    case Term::Kind::kApp:
      collect_free(t.fn(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
    case Term::Kind::kAbs:
      bound.push_back(t.bound());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

std::vector<Term> free_vars(const Term& t) {
  std::vector<Term> bound, out;
  collect_free(t, bound, out);
  return out;
}

bool occurs_free(const Term& var, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t == var;
    case Term::Kind::kConst:
      return false;
    case Term::Kind::kApp:
      return occurs_free(var, t.fn()) || occurs_free(var, t.arg());
    case Term::Kind::kAbs:
      return !(t.bound() == var) && occurs_free(var, t.body());
  }
  return false;
}

namespace {

void collect_consts(const Term& t, std::vector<std::pair<std::string, Type>>& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return;
    case Term::Kind::kConst: {
      std::pair<std::string, Type> key{t.id(), t.type()};
      if (std::find(out.begin(), out.end(), key) == out.end()) out.push_back(std::move(key));
      return;
    }
    case Term::Kind::kApp:
      collect_consts(t.fn(), out);
      collect_consts(t.arg(), out);
      return;
    case Term::Kind::kAbs:
      collect_consts(t.body(), out);
      return;
  }
}

void collect_term_tyvars(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      t.type().collect_type_vars(out);
      return;
    case Term::Kind::kApp:
      collect_term_tyvars(t.fn(), out);
      collect_term_tyvars(t.arg(), out);
      return;
    case Term::Kind::kAbs:
      collect_term_tyvars(t.bound(), out);
      collect_term_tyvars(t.body(), out);
      return;
  }
}

}  // namespace

std::vector<std::pair<std::string, Type>> constant_occurrences(const Term& t) {
  std::vector<std::pair<std::string, Type>> out;
  collect_consts(t, out);
  return out;
}

std::vector<std::string> term_type_vars(const Term& t) {
  std::vector<std::string> out;
  collect_term_tyvars(t, out);
  return out;
}

Term instantiate_types(const Term& t, const TypeSubst& subst) {
  if (subst.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::kVar:
      return Term::var(t.name(), instantiate(t.type(), subst));
    case Term::Kind::kConst:
      return Term::constant(t.name(), t.id(), instantiate(t.type(), subst));
    case Term::Kind::kApp:
      return Term::app(instantiate_types(t.fn(), subst), instantiate_types(t.arg(), subst));
    case Term::Kind::kAbs:
      return Term::abs(instantiate_types(t.bound(), subst),
                       instantiate_types(t.body(), subst));
  }
  return t;
}

namespace {

bool name_free_in(const std::string& name, const Term& t) {
  for (const auto& v : free_vars(t)) {
    if (v.name() == name) return true;
  }
  return false;
}

Term fresh_variant(const Term& var, const Term& avoid1, const Term& avoid2) {
  for (int k = 0;; ++k) {
    std::string candidate = var.name() + std::to_string(k);
    if (!name_free_in(candidate, avoid1) && !name_free_in(candidate, avoid2)) {
      return Term::var(std::move(candidate), var.type());
    }
  }
}

}  // namespace

Term substitute(const Term& t, const Term& var, const Term& replacement) {
  if (!occurs_free(var, t)) return t;
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t == var ? replacement : t;
    case Term::Kind::kConst:
      return t;
    case Term::Kind::kApp:
      return Term::app(substitute(t.fn(), var, replacement),
                       substitute(t.arg(), var, replacement));
    case Term::Kind::kAbs: {
      Term bound = t.bound();
      Term body = t.body();
      if (occurs_free(bound, replacement)) {
        Term fresh = fresh_variant(bound, replacement, body);
        body = substitute(body, bound, fresh);
        bound = fresh;
      }
      return Term::abs(bound, substitute(body, var, replacement));
    }
  }
  return t;
}

Term beta_normalize(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return t;
    case Term::Kind::kAbs: {
      Term body = beta_normalize(t.body());
      return body == t.body() ? t : Term::abs(t.bound(), body);
    }
    case Term::Kind::kApp: {
      Term fn = beta_normalize(t.fn());
      Term arg = beta_normalize(t.arg());
      if (fn.is_abs()) return beta_normalize(substitute(fn.body(), fn.bound(), arg));
      if (fn == t.fn() && arg == t.arg()) return t;
      return Term::app(fn, arg);
    }
  }
  return t;
}

bool has_beta_redex(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kConst:
      return false;
    case Term::Kind::kAbs:
      return has_beta_redex(t.body());
    case Term::Kind::kApp:
      return t.fn().is_abs() || has_beta_redex(t.fn()) || has_beta_redex(t.arg());
  }
  return false;
}

namespace {

using Env = std::vector<std::pair<Term, Term>>;

bool alpha_rec(const Term& a, const Term& b, Env& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kVar: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        const bool left = it->first == a;
        const bool right = it->second == b;
        if (left || right) return left && right;
      }
      return a == b;
    }
    case Term::Kind::kConst:
      return a == b;
    case Term::Kind::kApp:
      return a.type() == b.type() && alpha_rec(a.fn(), b.fn(), env) &&
             alpha_rec(a.arg(), b.arg(), env);
    case Term::Kind::kAbs: {
      if (a.bound().type() != b.bound().type()) return false;
      env.emplace_back(a.bound(), b.bound());
      bool ok = alpha_rec(a.body(), b.body(), env);
      env.pop_back();
      return ok;
    }
  }
  return false;
}

Term logical_const(const char* id, const TypeSubst& subst = {}) {
  const auto& types = logical_constant_types();
  return Term::constant(id, id, instantiate(types.at(id), subst));
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  Env env;
  return alpha_rec(a, b, env);
}

Term mk_eq(const Term& lhs, const Term& rhs) {
  return Term::app(logical_const(logic::kEq, {{"A", lhs.type()}}), {lhs, rhs});
}
Term mk_conj(const Term& a, const Term& b) {
  return Term::app(logical_const(logic::kConj), {a, b});
}
Term mk_imp(const Term& a, const Term& b) {
  return Term::app(logical_const(logic::kImp), {a, b});
}
Term mk_neg(const Term& a) { return Term::app(logical_const(logic::kNeg), a); }
Term mk_forall(const Term& var, const Term& body) {
  return Term::app(logical_const(logic::kForall, {{"A", var.type()}}),
                   Term::abs(var, body));
}
Term mk_exists(const Term& var, const Term& body) {
  return Term::app(logical_const(logic::kExists, {{"A", var.type()}}),
                   Term::abs(var, body));
}
Term mk_true() { return logical_const(logic::kTrue); }
Term mk_false() { return logical_const(logic::kFalse); }

bool is_const(const Term& t, const char* id) { return t.is_const() && t.id() == id; }

bool is_binary_app(const Term& t, const char* id, Term* lhs, Term* rhs) {
  if (!t.is_app() || !t.fn().is_app() || !is_const(t.fn().fn(), id)) return false;
  if (lhs) *lhs = t.fn().arg();
  if (rhs) *rhs = t.arg();
  return true;
}

bool is_unary_app(const Term& t, const char* id, Term* arg) {
  if (!t.is_app() || !is_const(t.fn(), id)) return false;
  if (arg) *arg = t.arg();
  return true;
}

bool is_binder_app(const Term& t, const char* id, Term* var, Term* body) {
  if (!t.is_app() || !is_const(t.fn(), id) || !t.arg().is_abs()) return false;
  if (var) *var = t.arg().bound();
  if (body) *body = t.arg().body();
  return true;
}

std::pair<std::vector<Term>, Term> strip_forall(const Term& t) {
  std::vector<Term> vars;
  Term cur = t;
  Term var = cur, body = cur;
  while (is_binder_app(cur, logic::kForall, &var, &body)) {
    vars.push_back(var);
    cur = body;
  }
  return {std::move(vars), cur};
}

namespace {
void flatten_conj(const Term& t, std::vector<Term>& out) {
  Term l = t, r = t;
  if (is_binary_app(t, logic::kConj, &l, &r)) {
    flatten_conj(l, out);
    flatten_conj(r, out);
  } else {
    out.push_back(t);
  }
}
}  // namespace

std::vector<Term> conjuncts(const Term& t) {
  std::vector<Term> out;
  flatten_conj(t, out);
  return out;
}

Term list_mk_forall(const std::vector<Term>& vars, const Term& body) {
  Term out = body;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = mk_forall(*it, out);
  return out;
}

Term list_mk_conj(const std::vector<Term>& parts) {
  if (parts.empty()) return mk_true();
  Term out = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) out = mk_conj(*it, out);
  return out;
}

}  // namespace hammerkit::hol
