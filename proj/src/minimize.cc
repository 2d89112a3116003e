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

#include "hammerkit/minimize.h"

#include <mutex>
#include <tuple>

namespace hammerkit::prover {

MinimizeResult pseudo_minimize(const Prover& prover, const ProblemBuilder& build,
                               const std::vector<std::string>& premises, double timelimit) {
  MinimizeResult result;
  result.sizes.push_back(premises.size());
  std::vector<std::string> current = premises;
  while (true) {
    ProverRun run = prover.run(build(current), timelimit);
    ++result.runs;
    if (run.status != Status::kTheorem) break;
    const bool first = !result.proved;
    const std::size_t before = first ? current.size() : result.premises.size();
    result.proved = true;
    result.premises = run.used_premises;
    result.sizes.push_back(run.used_premises.size());
    // The first success always gets one re-run from its used set.
    if (!first && run.used_premises.size() >= before) break;
    current = run.used_premises;
  }
  return result;
}

CrossResult cross_minimize(const std::vector<const Prover*>& provers, const KnownProofs& proofs,
                           const std::function<ProblemBuilder(const std::string& theorem,
                                                              tptp::Format format)>& builder,
                           double timelimit, std::size_t workers) {
  std::vector<std::tuple<const std::string*, const Prover*, const std::vector<std::string>*>> jobs;
  for (const auto& [theorem, sets] : proofs) {
    for (const Prover* p : provers) {
      for (const auto& s : sets) jobs.emplace_back(&theorem, p, &s);
    }
  }
  std::vector<ProverRun> runs(jobs.size());
  parallel_for(jobs.size(), workers, [&](std::size_t i) {
    const auto& [theorem, p, premises] = jobs[i];
    runs[i] = p->run(builder(*theorem, p->format())(*premises), timelimit);
  });
  CrossResult out;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (runs[i].status != Status::kTheorem) continue;
    const auto& [theorem, p, premises] = jobs[i];
    auto& by_prover = out[*theorem];
    auto it = by_prover.find(p->id());
    if (it == by_prover.end() || runs[i].used_premises.size() < it->second.size()) {
      by_prover[p->id()] = runs[i].used_premises;
    }
  }
  return out;
}

}  // namespace hammerkit::prover
