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

#include "hammerkit/features.h"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "hammerkit/corpus.h"

namespace hammerkit::features {

using hol::Term;
using hol::Type;
namespace logic = hol::logic;

std::string mode_name(NormMode mode) {
  switch (mode) {
    case NormMode::kSyms0:
      return "syms0";
    case NormMode::kSyms:
      return "syms";
    case NormMode::kSymst:
      return "symst";
    case NormMode::kSymsd:
      return "symsd";
  }
  return "?";
}

NormMode parse_mode(const std::string& name) {
  if (name == "syms0") return NormMode::kSyms0;
  if (name == "syms") return NormMode::kSyms;
  if (name == "symst") return NormMode::kSymst;
  if (name == "symsd") return NormMode::kSymsd;
  throw std::invalid_argument("unknown normalization mode: " + name);
}

FeatureSet FeatureCounts::set() const {
  FeatureSet out;
  out.reserve(counts.size());
  for (const auto& [f, n] : counts) out.push_back(f);
  return out;
}

namespace {

class Extractor {
 public:
  Extractor(const Term& statement, NormMode mode, bool triv) : mode_(mode), triv_(triv) {
    const std::vector<std::string> tyvars = hol::term_type_vars(statement);
    for (std::size_t k = 0; k < tyvars.size(); ++k) {
      tyvar_subst_.emplace(tyvars[k], Type::var(mode == NormMode::kSymsd
                                                    ? "A" + std::to_string(k)
                                                    : std::string("A")));
    }
    for (const auto& v : hol::free_vars(statement)) env_.emplace_back(v, fresh_name(v));
  }

  FeatureCounts run(const Term& t) {
    walk_types(t);
    formula(t);
    return std::move(out_);
  }

 private:
  void add(const std::string& f) { ++out_.counts[f]; }

  Type normalize(const Type& ty) const { return hol::instantiate(ty, tyvar_subst_); }

  std::string fresh_name(const Term& v) {
    switch (mode_) {
      case NormMode::kSyms0:
        return "A0";
      case NormMode::kSyms:
        return "A" + std::to_string(env_.size());
      case NormMode::kSymst:
      case NormMode::kSymsd:
        return "A" + normalize(v.type()).to_string();
    }
    return "A0";
  }

  void add_type(const Type& ty) {
    if (ty.is_var()) return;
    add(ty.name());
    for (const auto& a : ty.args()) add_type(a);
  }

  // Type constructors and constants, anywhere in the statement.
  void walk_types(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kVar:
        add_type(t.type());
        return;
      case Term::Kind::kConst:
        add_type(t.type());
        if (triv_ || !logic::is_logical(t.id())) add(t.id());
        return;
      case Term::Kind::kApp:
        walk_types(t.fn());
        walk_types(t.arg());
        return;
      case Term::Kind::kAbs:
        walk_types(t.bound());
        walk_types(t.body());
        return;
    }
  }

  static bool formula_shaped(const Term& t) {
    return hol::is_binary_app(t, logic::kConj, nullptr, nullptr) ||
           hol::is_binary_app(t, logic::kDisj, nullptr, nullptr) ||
           hol::is_binary_app(t, logic::kImp, nullptr, nullptr) ||
           hol::is_binary_app(t, logic::kEq, nullptr, nullptr) ||
           hol::is_unary_app(t, logic::kNeg, nullptr) ||
           hol::is_binder_app(t, logic::kForall, nullptr, nullptr) ||
           hol::is_binder_app(t, logic::kExists, nullptr, nullptr);
  }

  void bind(const Term& v) { env_.emplace_back(v, fresh_name(v)); }

  void formula(const Term& t) {
    Term a = t, b = t;
    for (const char* op : {logic::kConj, logic::kDisj, logic::kImp}) {
      if (hol::is_binary_app(t, op, &a, &b)) {
        formula(a);
        formula(b);
        return;
      }
    }
    if (hol::is_unary_app(t, logic::kNeg, &a)) {
      formula(a);
      return;
    }
    for (const char* q : {logic::kForall, logic::kExists}) {
      if (hol::is_binder_app(t, q, &a, &b)) {
        bind(a);
        formula(b);
        env_.pop_back();
        return;
      }
    }
    if (hol::is_binary_app(t, logic::kEq, &a, &b) && a.type().is_bool() &&
        (formula_shaped(a) || formula_shaped(b))) {
      formula(a);
      formula(b);
      return;
    }
    if (t.is_const() && logic::is_logical(t.id())) return;  // T, F
    component(t);
  }

  // Adds `t` and, recursively, its argument subterms.
  void component(const Term& t) {
    add(print(t));
    auto [head, args] = hol::strip_comb(t);
    if (head.is_abs()) {
      bind(head.bound());
      component(head.body());
      env_.pop_back();
    }
    for (const auto& a : args) component(a);
  }

  std::string var_name(const Term& v) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
      if (it->first == v) return it->second;
    }
    return "A0";
  }

  std::string print(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kVar:
        return var_name(t);
      case Term::Kind::kConst:
        return t.id();
      case Term::Kind::kAbs: {
        bind(t.bound());
        std::string out = "(\\ " + env_.back().second + " " + print(t.body()) + ")";
        env_.pop_back();
        return out;
      }
      case Term::Kind::kApp:
        break;
    }
    auto [head, args] = hol::strip_comb(t);
    std::string out = "(" + print(head);
    for (const auto& a : args) out += " " + print(a);
    return out + ")";
  }

  NormMode mode_;
  bool triv_;
  hol::TypeSubst tyvar_subst_;
  std::vector<std::pair<Term, std::string>> env_;
  FeatureCounts out_;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

FeatureCounts extract_feature_counts(const Term& statement, NormMode mode, bool include_trivial) {
  return Extractor(statement, mode, include_trivial).run(statement);
}

FeatureSet extract_features(const Term& statement, NormMode mode, bool include_trivial) {
  return extract_feature_counts(statement, mode, include_trivial).set();
}

void write_feature_file(const corpus::Corpus& corpus, NormMode mode, bool include_trivial,
                        std::ostream& out) {
  for (const auto& e : corpus.entries()) {
    out << e.name << ':';
    bool first = true;
    for (const auto& f : extract_features(e.statement, mode, include_trivial)) {
      out << (first ? " " : ", ") << quote(f);
      first = false;
    }
    out << '\n';
  }
}

std::vector<NamedFeatures> read_feature_file(std::istream& in) {
  std::vector<NamedFeatures> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::runtime_error("feature line lacks ':'");
    NamedFeatures nf{line.substr(0, colon), {}};
    std::size_t i = colon + 1;
    while (i < line.size()) {
      if (line[i] != '"') {
        ++i;
        continue;
      }
      std::string f;
      for (++i; i < line.size() && line[i] != '"'; ++i) {
        if (line[i] == '\\' && i + 1 < line.size()) ++i;
        f += line[i];
      }
      ++i;
      nf.features.push_back(std::move(f));
    }
    out.push_back(std::move(nf));
  }
  return out;
}

}  // namespace hammerkit::features
