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

// Translation of a goal and its premises from HOL into TPTP problems.
//
// The first-order route is: beta normalization, lambda lifting, minimal-
// arity apply introduction, then either FOF with `s(type, term)` tagging or
// TFF1 with explicit type arguments. The predicate `p` mediates between
// boolean terms and formulas in both dialects. The higher-order route
// (monomorphisation + THF0) lives in thf.h.
//
// Lifted lambda definitions go through the same apply/tagging pipeline as
// every other formula of the problem.

#ifndef HAMMERKIT_TRANSLATE_H_
#define HAMMERKIT_TRANSLATE_H_

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hammerkit/hol.h"
#include "hammerkit/hol_parser.h"

namespace hammerkit::tptp {

enum class Format { kFof, kTff1, kThf };

std::string format_name(Format format);
Format parse_format(const std::string& name);  // "fof" | "tff1" | "thf"

class NotFirstOrder : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedFormula {
  std::string name;
  hol::Term term;
};

struct LiftedDef {
  std::string id;        // fresh constant id, lift0, lift1, ...
  hol::Term constant;    // at its most general type
  hol::Term equation;    // !fvs xs. c fvs xs = body
};

struct LiftResult {
  hol::Term goal;
  std::vector<NamedFormula> premises;
  std::vector<LiftedDef> defs;
};

// Replaces every abstraction that is not the argument of a quantifier at
// formula position by a fresh combinator applied to its free variables.
// Quantifiers over non-abstractions are eta-expanded. Identical closed
// abstractions share one combinator.
LiftResult lambda_lift(const hol::Term& goal, const std::vector<NamedFormula>& premises,
                       const hol::Signature& sig);

// Minimum number of direct arguments per constant id.
using ArityMap = std::map<std::string, std::size_t>;

struct ApplyResult {
  std::vector<hol::Term> terms;
  ArityMap arity;
};

inline constexpr const char* kApplyId = "happ";
hol::Term apply_constant(const hol::Type& domain, const hol::Type& codomain);

// Rewrites formulas so every constant receives exactly its minimal arity of
// direct arguments; surplus arguments and all applications of variables go
// through the binary apply constant `happ`.
ApplyResult introduce_apply(const std::vector<hol::Term>& formulas);

struct FoProblem {
  Format format = Format::kFof;
  std::vector<std::string> type_decls;  // complete declaration lines
  std::vector<std::pair<std::string, std::string>> axioms;  // label, formula
  std::pair<std::string, std::string> conjecture;           // label, formula
  // Axiom label -> premise name, for premises (not helper axioms).
  std::map<std::string, std::string> premise_labels;

  std::string serialize() const;
  std::size_t formula_count() const { return axioms.size() + 1; }
};

// Helper facts appended to every first-order problem, in emission order.
struct HelperAxiom {
  std::string name;
  hol::Term term;
};
const std::vector<HelperAxiom>& helper_axioms();

// Both exports take lambda-lifted input and run apply introduction over the
// whole problem, helper axioms included.
FoProblem export_fof(const hol::Term& goal, const std::vector<NamedFormula>& premises,
                     const std::vector<LiftedDef>& defs, const hol::Signature& sig);
FoProblem export_tff1(const hol::Term& goal, const std::vector<NamedFormula>& premises,
                      const std::vector<LiftedDef>& defs, const hol::Signature& sig);

// Full pipeline from (possibly unnormalized) HOL input.
FoProblem translate(Format format, const hol::Term& goal,
                    const std::vector<NamedFormula>& premises, const hol::Signature& sig);

}  // namespace hammerkit::tptp

#endif  // HAMMERKIT_TRANSLATE_H_
