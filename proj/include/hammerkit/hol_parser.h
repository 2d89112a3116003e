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

// Signatures and the parenthesized prefix syntax for types and terms.
//
// Types:   bool | A | (fun A bool) | (cart real N)
//          identifiers starting with an uppercase letter are type variables.
// Terms:   (v x T) | (c name [T]) | (app f x ...) | (lam (x T) ... body)
//          | (\ (x T) ... body) | (! (x T) ... body) | (? (x T) ... body)

#ifndef HAMMERKIT_HOL_PARSER_H_
#define HAMMERKIT_HOL_PARSER_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hammerkit/hol.h"

namespace hammerkit::hol {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownConstantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConstDecl {
  std::string name;  // surface name, may be overloaded
  std::string id;    // unique underlying name
  Type type;         // most general type
};

class Signature {
 public:
  // In open mode unknown type constructors and constants are declared on
  // first sight; sealed mode rejects them.
  enum class Mode { kOpen, kSealed };

  Signature();

  Mode mode() const { return mode_; }
  void set_mode(Mode mode) { mode_ = mode; }

  void declare_tycon(const std::string& name, int arity);
  std::optional<int> tycon_arity(const std::string& name) const;
  const std::map<std::string, int>& tycons() const { return tycons_; }

  // Declares a constant; `id` defaults to `name` and must be unused.
  const ConstDecl& declare_const(const std::string& name, const Type& type,
                                 std::string id = {});

  // Finds the unique declaration whose type generalizes `occurrence`.
  // Open mode declares unknown names with the occurrence type.
  const ConstDecl& resolve(const std::string& name, const Type& occurrence);
  const ConstDecl* find_id(const std::string& id) const;
  std::vector<const ConstDecl*> overloads(const std::string& name) const;
  const std::vector<ConstDecl>& constants() const { return consts_; }
  bool has_id(const std::string& id) const { return by_id_.count(id) > 0; }

  // Checks constructor arities, registering new constructors in open mode.
  void check_type(const Type& ty);

  // Signature file: `tycon name arity` and `const name type [id]` lines.
  void load(std::istream& in);
  void save(std::ostream& out) const;

 private:
  Mode mode_ = Mode::kOpen;
  std::map<std::string, int> tycons_;
  std::vector<ConstDecl> consts_;
  std::map<std::string, std::size_t> by_id_;
  std::multimap<std::string, std::size_t> by_name_;
};

Type parse_type(std::string_view text, Signature& sig);
Term parse_term(std::string_view text, Signature& sig);

struct PrintOptions {
  // Rename bound variables b0, b1, ... in binder order (canonical form).
  bool rename_bound = true;
};

std::string print_type(const Type& ty);
std::string print_term(const Term& t, PrintOptions options = {});

struct Statement {
  std::string name;
  std::string text;
};

// Reads `name<TAB>term-text` lines; blank lines and `#` comments skipped.
std::vector<Statement> read_statement_lines(std::istream& in);

}  // namespace hammerkit::hol

#endif  // HAMMERKIT_HOL_PARSER_H_
