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

// Goal-anchored monomorphisation and THF0 export.
//
// The instantiating constants are read from the goal once. Every premise is
// matched against that fixed set, so the cost is linear in the number of
// premises and premises never contribute new instantiations.

#ifndef HAMMERKIT_THF_H_
#define HAMMERKIT_THF_H_

#include <cstddef>
#include <string>
#include <vector>

#include "hammerkit/hol.h"
#include "hammerkit/translate.h"

namespace hammerkit::tptp {

inline constexpr std::size_t kMaxInstancesPerPremise = 4;

struct PremiseInstance {
  std::string premise;   // original premise name
  std::size_t serial;    // N in <premise>_monomorphizedN
  hol::TypeSubst subst;  // over the premise's own type variables
  hol::Term term;        // ground instance
};

// Replaces each type variable of the goal by a fresh nullary type named by
// its lowercased name (A -> a).
hol::Term ground_goal(const hol::Term& goal);

// Instances of each premise at the constant types of `goal`, which must be
// ground. Instances are ordered by their printed substitution and capped.
std::vector<PremiseInstance> monomorphise(const hol::Term& goal,
                                          const std::vector<NamedFormula>& premises,
                                          std::size_t cap = kMaxInstancesPerPremise);

FoProblem export_thf(const hol::Term& goal, const std::vector<NamedFormula>& premises,
                     const hol::Signature& sig);

}  // namespace hammerkit::tptp

#endif  // HAMMERKIT_THF_H_
