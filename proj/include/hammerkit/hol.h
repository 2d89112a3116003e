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

// Polymorphic simple types and typed lambda terms of higher-order logic.
//
// Types and terms are immutable values backed by shared nodes, so copying is
// cheap and sharing across threads needs no synchronization. Every term
// caches its type at construction; App checks well-typedness eagerly.

#ifndef HAMMERKIT_HOL_H_
#define HAMMERKIT_HOL_H_

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hammerkit::hol {

class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Type {
 public:
  static Type var(std::string name);
  static Type app(std::string constructor, std::vector<Type> args = {});
  static Type fun(Type domain, Type codomain);
  static Type boolean();
  static Type ind();

  bool is_var() const { return node_->is_var; }
  // Variable name or constructor name.
  const std::string& name() const { return node_->name; }
  const std::vector<Type>& args() const { return node_->args; }

  bool is_fun() const;
  bool is_bool() const;
  const Type& domain() const;
  const Type& codomain() const;

  // Type variables in order of first occurrence (left to right).
  std::vector<std::string> type_vars() const;
  void collect_type_vars(std::vector<std::string>& out) const;
  bool is_ground() const;

  friend bool operator==(const Type& a, const Type& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const Type& a, const Type& b) {
    return compare(a, b) <=> 0;
  }

  std::string to_string() const;

 private:
  struct Node {
    bool is_var;
    std::string name;
    std::vector<Type> args;
  };
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static int compare(const Type& a, const Type& b);

  std::shared_ptr<const Node> node_;
};

using TypeSubst = std::map<std::string, Type>;

Type instantiate(const Type& ty, const TypeSubst& subst);

// One-way matching: extends `subst` so that instantiate(pattern) == target.
// Returns false (leaving `subst` in an unspecified state) when impossible.
bool match_type(const Type& pattern, const Type& target, TypeSubst& subst);

// Builds `dom1 -> dom2 -> ... -> result`.
Type fun_type(const std::vector<Type>& domains, const Type& result);

// Splits `a1 -> ... -> an -> r` into ([a1..an], r), peeling at most
// `max_args` arrows.
std::pair<std::vector<Type>, Type> strip_fun(const Type& ty,
                                             std::size_t max_args = SIZE_MAX);

// Names of the built-in logical constants.
namespace logic {
inline constexpr const char* kEq = "eq";
inline constexpr const char* kConj = "conj";
inline constexpr const char* kDisj = "disj";
inline constexpr const char* kImp = "imp";
inline constexpr const char* kNeg = "neg";
inline constexpr const char* kForall = "forall";
inline constexpr const char* kExists = "exists";
inline constexpr const char* kTrue = "true";
inline constexpr const char* kFalse = "false";
inline constexpr const char* kSelect = "select";

// The nine logical constants filtered from features: eq, the connectives,
// the quantifiers and the truth values. `select` is carried syntactically.
bool is_logical(const std::string& name);
}  // namespace logic

class Term {
 public:
  enum class Kind { kVar, kConst, kApp, kAbs };

  static Term var(std::string name, Type ty);
  // `name` is the surface name, `id` the resolved (non-overloaded) name.
  static Term constant(std::string name, std::string id, Type ty);
  static Term constant(std::string name, Type ty) {
    std::string id = name;
    return constant(std::move(name), std::move(id), std::move(ty));
  }
  static Term app(Term fn, Term arg);  // throws TypeError
  static Term app(Term fn, const std::vector<Term>& args);
  static Term abs(Term bound, Term body);  // bound must be a Var

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::kVar; }
  bool is_const() const { return kind() == Kind::kConst; }
  bool is_app() const { return kind() == Kind::kApp; }
  bool is_abs() const { return kind() == Kind::kAbs; }

  const Type& type() const { return node_->ty; }
  const std::string& name() const { return node_->name; }
  const std::string& id() const { return node_->id; }
  const Term& fn() const { return node_->children[0]; }
  const Term& arg() const { return node_->children[1]; }
  const Term& bound() const { return node_->children[0]; }
  const Term& body() const { return node_->children[1]; }

  // Structural identity (bound variable names matter).
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  // Ordering on variables only (name, then type); used as a map key.
  struct VarLess {
    bool operator()(const Term& a, const Term& b) const;
  };

 private:
  struct Node {
    Kind kind;
    Type ty;
    std::string name;
    std::string id;
    std::vector<Term> children;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

using VarSet = std::set<Term, Term::VarLess>;

inline const Type& type_of(const Term& t) { return t.type(); }

// Head and arguments of an application spine `h a1 ... an`.
std::pair<Term, std::vector<Term>> strip_comb(const Term& t);

// Free variables in order of first occurrence.
std::vector<Term> free_vars(const Term& t);
bool occurs_free(const Term& var, const Term& t);

// All (constant id, occurrence type) pairs, in order of first occurrence.
std::vector<std::pair<std::string, Type>> constant_occurrences(const Term& t);

// Type variables of all types occurring in the term, first occurrence order.
std::vector<std::string> term_type_vars(const Term& t);

Term instantiate_types(const Term& t, const TypeSubst& subst);

// Capture-avoiding substitution of `replacement` for free `var` in `t`.
Term substitute(const Term& t, const Term& var, const Term& replacement);

// Full beta normal form. Bound names are kept unless a substitution would
// capture, in which case the binder gets the first free `name<k>`.
Term beta_normalize(const Term& t);
bool has_beta_redex(const Term& t);

bool alpha_equal(const Term& a, const Term& b);

// Logical-constant helpers. These look up the built-in constants by id and
// instantiate their polymorphic types as needed.
Term mk_eq(const Term& lhs, const Term& rhs);
Term mk_conj(const Term& a, const Term& b);
Term mk_imp(const Term& a, const Term& b);
Term mk_neg(const Term& a);
Term mk_forall(const Term& var, const Term& body);
Term mk_exists(const Term& var, const Term& body);
Term mk_true();
Term mk_false();

// Generic most-general types of the logical constants.
const std::map<std::string, Type>& logical_constant_types();

// Recognizers; each returns true and fills the outputs on a match.
bool is_binary_app(const Term& t, const char* id, Term* lhs, Term* rhs);
bool is_unary_app(const Term& t, const char* id, Term* arg);
bool is_binder_app(const Term& t, const char* id, Term* var, Term* body);
bool is_const(const Term& t, const char* id);

// Strips leading universal quantifiers.
std::pair<std::vector<Term>, Term> strip_forall(const Term& t);
// Flattens a conjunction tree left to right.
std::vector<Term> conjuncts(const Term& t);
Term list_mk_forall(const std::vector<Term>& vars, const Term& body);
Term list_mk_conj(const std::vector<Term>& parts);

}  // namespace hammerkit::hol

#endif  // HAMMERKIT_HOL_H_
