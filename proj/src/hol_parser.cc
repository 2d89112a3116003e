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

#include "hammerkit/hol_parser.h"

#include <cctype>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace hammerkit::hol {

Signature::Signature() {
  tycons_ = {{"bool", 0}, {"fun", 2}, {"ind", 0}};
  for (const auto& [name, ty] : logical_constant_types()) declare_const(name, ty, name);
}

void Signature::declare_tycon(const std::string& name, int arity) {
  auto [it, inserted] = tycons_.emplace(name, arity);
  if (!inserted && it->second != arity) {
    throw TypeError("type constructor " + name + " used with arity " +
                    std::to_string(arity) + " but declared with arity " +
                    std::to_string(it->second));
  }
}

std::optional<int> Signature::tycon_arity(const std::string& name) const {
  auto it = tycons_.find(name);
  if (it == tycons_.end()) return std::nullopt;
  return it->second;
}

const ConstDecl& Signature::declare_const(const std::string& name, const Type& type,
                                          std::string id) {
  if (id.empty()) id = name;
  if (by_id_.count(id)) throw TypeError("constant id declared twice: " + id);
  check_type(type);
  consts_.push_back(ConstDecl{name, id, type});
  by_id_[id] = consts_.size() - 1;
  by_name_.emplace(name, consts_.size() - 1);
  return consts_.back();
}

std::vector<const ConstDecl*> Signature::overloads(const std::string& name) const {
  std::vector<const ConstDecl*> out;
  auto [lo, hi] = by_name_.equal_range(name);
  for (auto it = lo; it != hi; ++it) out.push_back(&consts_[it->second]);
  return out;
}

const ConstDecl* Signature::find_id(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &consts_[it->second];
}

const ConstDecl& Signature::resolve(const std::string& name, const Type& occurrence) {
  const ConstDecl* found = nullptr;
  int matches = 0;
  for (const ConstDecl* decl : overloads(name)) {
    TypeSubst subst;
    if (match_type(decl->type, occurrence, subst)) {
      found = decl;
      ++matches;
    }
  }
  if (matches == 1) return *found;
  if (matches > 1) {
    throw TypeError("ambiguous overloaded constant " + name + " at type " +
                    occurrence.to_string());
  }
  if (overloads(name).empty()) {
    if (mode_ == Mode::kOpen) {
      std::string id = name;
      while (by_id_.count(id)) id += "'";
      return declare_const(name, occurrence, id);
    }
    throw UnknownConstantError("unknown constant " + name);
  }
  throw TypeError("constant " + name + " has no declaration generalizing type " +
                  occurrence.to_string());
}

void Signature::check_type(const Type& ty) {
  if (ty.is_var()) return;
  auto arity = tycon_arity(ty.name());
  const int n = static_cast<int>(ty.args().size());
  if (!arity) {
    if (mode_ == Mode::kSealed) throw TypeError("unknown type constructor " + ty.name());
    declare_tycon(ty.name(), n);
  } else if (*arity != n) {
    throw TypeError("type constructor " + ty.name() + " expects " +
                    std::to_string(*arity) + " arguments, got " + std::to_string(n));
  }
  for (const auto& a : ty.args()) check_type(a);
}

namespace {

struct Sexp {
  bool is_atom = false;
  std::string atom;
  std::vector<Sexp> items;
  std::size_t offset = 0;
};

class SexpReader {
 public:
  explicit SexpReader(std::string_view text) : text_(text) {}

  Sexp read_one() {
    Sexp s = read();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
    return s;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  Sexp read() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    Sexp s;
    s.offset = pos_;
    if (text_[pos_] == '(') {
      ++pos_;
      for (;;) {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unbalanced parenthesis", s.offset);
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        s.items.push_back(read());
      }
      return s;
    }
    if (text_[pos_] == ')') throw SyntaxError("unexpected ')'", pos_);
    s.is_atom = true;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      s.atom += text_[pos_++];
    }
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_type_var_name(const std::string& name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
}

class Builder {
 public:
  explicit Builder(Signature& sig) : sig_(sig) {}

  Type type(const Sexp& s) {
    if (s.is_atom) {
      if (is_type_var_name(s.atom)) return Type::var(s.atom);
      Type ty = Type::app(s.atom);
      checked(ty, s);
      return ty;
    }
    if (s.items.empty() || !s.items[0].is_atom) {
      throw SyntaxError("expected a type constructor", s.offset);
    }
    const std::string& con = s.items[0].atom;
    if (is_type_var_name(con)) {
      throw SyntaxError("type variable " + con + " cannot take arguments", s.offset);
    }
    std::vector<Type> args;
    for (std::size_t i = 1; i < s.items.size(); ++i) args.push_back(type(s.items[i]));
    Type ty = Type::app(con, std::move(args));
    checked(ty, s);
    return ty;
  }

  Term term(const Sexp& s) {
    if (s.is_atom || s.items.empty() || !s.items[0].is_atom) {
      throw SyntaxError("expected a term form", s.offset);
    }
    const std::string& head = s.items[0].atom;
    const auto& items = s.items;
    try {
      if (head == "v") {
        expect_size(s, 3);
        return Term::var(atom(items[1]), type(items[2]));
      }
      if (head == "c") {
        if (items.size() != 2 && items.size() != 3) {
          throw SyntaxError("(c name [type]) expected", s.offset);
        }
        const std::string name = atom(items[1]);
        if (items.size() == 2) return bare_constant(name, s);
        Type ty = type(items[2]);
        const ConstDecl& decl = sig_.resolve(name, ty);
        return Term::constant(name, decl.id, ty);
      }
      if (head == "app") {
        if (items.size() < 3) throw SyntaxError("(app f x ...) expected", s.offset);
        Term out = term(items[1]);
        for (std::size_t i = 2; i < items.size(); ++i) out = Term::app(out, term(items[i]));
        return out;
      }
      if (head == "lam" || head == "\\" || head == "!" || head == "?") {
        if (items.size() < 3) throw SyntaxError("binder needs variables and a body", s.offset);
        std::vector<Term> vars;
        for (std::size_t i = 1; i + 1 < items.size(); ++i) vars.push_back(binder(items[i]));
        Term body = term(items.back());
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
          if (head == "!" || head == "?") {
            if (!body.type().is_bool()) {
              throw TypeError("quantifier body must have type bool, got " +
                              body.type().to_string());
            }
            body = head == "!" ? mk_forall(*it, body) : mk_exists(*it, body);
          } else {
            body = Term::abs(*it, body);
          }
        }
        return body;
      }
    } catch (const TypeError& e) {
      throw TypeError(std::string(e.what()) + " at offset " + std::to_string(s.offset));
    }
    throw SyntaxError("unknown term form '" + head + "'", s.offset);
  }

 private:
  void checked(const Type& ty, const Sexp& s) {
    try {
      sig_.check_type(ty);
    } catch (const TypeError& e) {
      throw TypeError(std::string(e.what()) + " at offset " + std::to_string(s.offset));
    }
  }

  static std::string atom(const Sexp& s) {
    if (!s.is_atom) throw SyntaxError("expected an identifier", s.offset);
    return s.atom;
  }

  static void expect_size(const Sexp& s, std::size_t n) {
    if (s.items.size() != n) {
      throw SyntaxError("form '" + s.items[0].atom + "' expects " + std::to_string(n - 1) +
                            " arguments",
                        s.offset);
    }
  }

  Term binder(const Sexp& s) {
    if (s.is_atom || s.items.size() != 2) {
      throw SyntaxError("binder must be (name type)", s.offset);
    }
    return Term::var(atom(s.items[0]), type(s.items[1]));
  }

  Term bare_constant(const std::string& name, const Sexp& s) {
    auto decls = sig_.overloads(name);
    if (decls.empty()) {
      if (sig_.mode() == Signature::Mode::kSealed) {
        throw UnknownConstantError("unknown constant " + name);
      }
      throw SyntaxError("first use of constant " + name + " needs an explicit type",
                        s.offset);
    }
    if (decls.size() != 1 || !decls[0]->type.type_vars().empty()) {
      throw SyntaxError("constant " + name + " needs an explicit type", s.offset);
    }
    return Term::constant(name, decls[0]->id, decls[0]->type);
  }

  Signature& sig_;
};

}  // namespace

Type parse_type(std::string_view text, Signature& sig) {
  Sexp s = SexpReader(text).read_one();
  return Builder(sig).type(s);
}

Term parse_term(std::string_view text, Signature& sig) {
  Sexp s = SexpReader(text).read_one();
  return Builder(sig).term(s);
}

std::string print_type(const Type& ty) { return ty.to_string(); }

namespace {

class Printer {
 public:
  Printer(const Term& root, PrintOptions options) : options_(options) {
    for (const auto& v : free_vars(root)) reserved_.insert(v.name());
  }

  void print(const Term& t, std::string& out) {
    switch (t.kind()) {
      case Term::Kind::kVar: {
        out += "(v ";
        out += lookup(t);
        out += ' ';
        out += t.type().to_string();
        out += ')';
        return;
      }
      case Term::Kind::kConst:
        out += "(c ";
        out += t.name();
        out += ' ';
        out += t.type().to_string();
        out += ')';
        return;
      case Term::Kind::kApp: {
        Term var = t, body = t;
        if (is_binder_app(t, logic::kForall, &var, &body)) {
          binder("!", var, body, out);
        } else if (is_binder_app(t, logic::kExists, &var, &body)) {
          binder("?", var, body, out);
        } else {
          out += "(app ";
          print(t.fn(), out);
          out += ' ';
          print(t.arg(), out);
          out += ')';
        }
        return;
      }
      case Term::Kind::kAbs:
        binder("lam", t.bound(), t.body(), out);
        return;
    }
  }

 private:
  void binder(const char* head, const Term& var, const Term& body, std::string& out) {
    std::string name = var.name();
    if (options_.rename_bound) {
      do {
        name = "b" + std::to_string(counter_++);
      } while (reserved_.count(name));
    }
    out += '(';
    out += head;
    out += " (";
    out += name;
    out += ' ';
    out += var.type().to_string();
    out += ") ";
    scope_.emplace_back(var, name);
    print(body, out);
    scope_.pop_back();
    out += ')';
  }

  std::string lookup(const Term& var) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == var) return it->second;
    }
    return var.name();
  }

  PrintOptions options_;
  int counter_ = 0;
  std::set<std::string> reserved_;
  std::vector<std::pair<Term, std::string>> scope_;
};

}  // namespace

std::string print_term(const Term& t, PrintOptions options) {
  std::string out;
  Printer(t, options).print(t, out);
  return out;
}

void Signature::load(std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind[0] == '#') continue;
    std::string name;
    ls >> name;
    if (kind == "tycon") {
      int arity = -1;
      if (!(ls >> arity) || arity < 0) {
        throw SyntaxError("bad tycon line " + std::to_string(lineno), 0);
      }
      declare_tycon(name, arity);
    } else if (kind == "const") {
      std::string rest;
      std::getline(ls, rest);
      // The type is one s-expression; an optional id may follow it.
      std::string id;
      std::size_t depth = 0, end = 0, start = rest.find_first_not_of(" \t");
      if (start == std::string::npos) {
        throw SyntaxError("missing type on line " + std::to_string(lineno), 0);
      }
      for (end = start; end < rest.size(); ++end) {
        char ch = rest[end];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (std::isspace(static_cast<unsigned char>(ch)) || ch == ')')) {
          if (ch == ')') ++end;
          break;
        }
      }
      std::string type_text = rest.substr(start, end - start);
      std::istringstream tail(rest.substr(end));
      tail >> id;
      declare_const(name, parse_type(type_text, *this), id);
    } else {
      throw SyntaxError("unknown signature line kind '" + kind + "' on line " +
                            std::to_string(lineno),
                        0);
    }
  }
}

void Signature::save(std::ostream& out) const {
  for (const auto& [name, arity] : tycons_) out << "tycon " << name << ' ' << arity << '\n';
  const auto& builtin = logical_constant_types();
  for (const auto& decl : consts_) {
    if (builtin.count(decl.id) && decl.id == decl.name) continue;
    out << "const " << decl.name << ' ' << decl.type.to_string();
    if (decl.id != decl.name) out << ' ' << decl.id;
    out << '\n';
  }
}

std::vector<Statement> read_statement_lines(std::istream& in) {
  std::vector<Statement> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw SyntaxError("statement line " + std::to_string(lineno) +
                            " is not name<TAB>term",
                        0);
    }
    out.push_back(Statement{line.substr(0, tab), line.substr(tab + 1)});
  }
  return out;
}

}  // namespace hammerkit::hol
