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

#ifndef HAMMERKIT_FIXTURE_PROVER_H_
#define HAMMERKIT_FIXTURE_PROVER_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hammerkit/prover.h"

namespace hammerkit::prover {

// Deterministic stand-in for an ATP.
//
// Oracle mode answers from a table keyed by problem id (GaveUp when absent).
// Syntactic mode reads the first-order formulas as strings: a formula of the
// shape "(a1 & ... & an) => b" without a leading quantifier is a rule, any
// other axiom is a fact. Variables are renamed in order of appearance, so
// formulas equal up to bound names compare equal. The conjecture is proved
// when it is a fact or becomes one within `depth` rounds of forward
// chaining; an implication conjecture first assumes its antecedents.
class FixtureProver : public Prover {
 public:
  static constexpr int kDefaultDepth = 8;

  // Syntactic mode.
  explicit FixtureProver(std::string id = "fixture", int depth = kDefaultDepth,
                         tptp::Format format = tptp::Format::kFof);
  // Oracle mode.
  FixtureProver(std::string id, std::map<std::string, ProverRun> table);

  std::string id() const override { return id_; }
  tptp::Format format() const override { return format_; }
  ProverRun run(const Problem& problem, double timelimit) const override;

  bool oracle_mode() const { return oracle_; }

 private:
  std::string id_;
  int depth_ = kDefaultDepth;
  tptp::Format format_ = tptp::Format::kFof;
  bool oracle_ = false;
  std::map<std::string, ProverRun> table_;
};

struct ChainResult {
  bool proved = false;
  std::vector<std::string> used_labels;  // in axiom order
};

// The syntactic engine on (label, formula) pairs.
ChainResult chain_prove(const std::vector<std::pair<std::string, std::string>>& axioms,
                        const std::string& conjecture, int depth);

// Renames uppercase-initial identifiers to V0, V1, ... in order of first
// appearance.
std::string alpha_normal_text(const std::string& formula);

// Reads "lang(label, role, formula)." lines back into axioms and conjecture.
struct ParsedProblem {
  std::vector<std::pair<std::string, std::string>> axioms;
  std::string conjecture;
};
ParsedProblem parse_problem_text(const std::string& text);

}  // namespace hammerkit::prover

#endif  // HAMMERKIT_FIXTURE_PROVER_H_
