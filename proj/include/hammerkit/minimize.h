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

#ifndef HAMMERKIT_MINIMIZE_H_
#define HAMMERKIT_MINIMIZE_H_

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hammerkit/prover.h"

namespace hammerkit::prover {

// Builds the problem for a goal restricted to the given premises.
using ProblemBuilder = std::function<Problem(const std::vector<std::string>& premises)>;

struct MinimizeResult {
  bool proved = false;
  std::vector<std::string> premises;  // last successful used set
  std::vector<std::size_t> sizes;     // input size, then the used size of each run
  std::size_t runs = 0;
};

// Proves from `premises`, then keeps re-proving from exactly the premises
// used last time until the count stops decreasing. A failing re-run ends the
// loop with the last successful set.
MinimizeResult pseudo_minimize(const Prover& prover, const ProblemBuilder& build,
                               const std::vector<std::string>& premises, double timelimit);

// theorem -> known premise sets (one per proof found so far).
using KnownProofs = std::map<std::string, std::vector<std::vector<std::string>>>;
// theorem -> prover -> smallest successful used set.
using CrossResult = std::map<std::string, std::map<std::string, std::vector<std::string>>>;

// Every prover is tried on every known premise set of every theorem.
CrossResult cross_minimize(const std::vector<const Prover*>& provers, const KnownProofs& proofs,
                           const std::function<ProblemBuilder(const std::string& theorem,
                                                              tptp::Format format)>& builder,
                           double timelimit, std::size_t workers = kDefaultWorkers);

}  // namespace hammerkit::prover

#endif  // HAMMERKIT_MINIMIZE_H_
