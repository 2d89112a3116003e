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

// Chronological evaluation, re-proving and the learn-prove improvement loop.

#ifndef HAMMERKIT_EVAL_H_
#define HAMMERKIT_EVAL_H_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hammerkit/corpus.h"
#include "hammerkit/features.h"
#include "hammerkit/learner.h"
#include "hammerkit/metrics.h"
#include "hammerkit/minimize.h"
#include "hammerkit/prover.h"
#include "hammerkit/training.h"

namespace hammerkit::eval {

inline const std::vector<std::size_t> kDefaultSlices = {8, 32, 128, 512};
inline const std::vector<std::size_t> kExtendedSlices = {4,   8,   16,  32,  64,
                                                         128, 256, 512, 1024, 2048};

struct EvalConfig {
  learners::LearnerConfig learner;
  learners::DepPolicy policy;  // atponly unless set
  std::vector<std::size_t> slices = kDefaultSlices;
  std::vector<const prover::Prover*> provers;
  double timelimit = 30;
  std::size_t workers = prover::kDefaultWorkers;
  bool every_tenth = false;  // evaluate only index % 10 == 0
  bool minimize = true;
  // Overrides `learner` when set.
  std::function<std::unique_ptr<learners::Learner>()> factory;
};

// Theorems that become problems: proved, non-trivial entries.
bool is_evaluated(const corpus::Corpus& corpus, std::size_t index, bool every_tenth);

// Non-trivial entries strictly before `index`, in chronological order.
std::vector<std::string> candidates_before(const corpus::Corpus& corpus, std::size_t index);

// Problem for `goal` restricted to `premises` in the prover's format.
prover::Problem make_problem(const corpus::Corpus& corpus, const std::string& goal,
                             const std::vector<std::string>& premises, const std::string& id,
                             tptp::Format format);

struct EvalResult {
  EvalMatrix matrix;
  std::vector<prover::CsvRecord> runs;  // chronological, then slice, then prover
  learners::AtpProofs proofs;           // minimized proofs found by this pass
  std::size_t predictions = 0;
};

// Predicts, proves, then trains, theorem by theorem. `known` proofs (for
// instance from re-proving) feed the training examples. Method names are
// "<learner>/<prover>/<slice>".
EvalResult run_chronological_eval(const corpus::Corpus& corpus,
                                  const std::vector<features::FeatureSet>& features,
                                  const EvalConfig& config,
                                  const learners::AtpProofs& known = {});

// Each prover on each theorem with exactly its (non-trivial) HOL deps.
// Method names are the prover ids.
EvalResult reprove(const corpus::Corpus& corpus, const std::vector<const prover::Prover*>& provers,
                   double timelimit, bool minimize = true,
                   std::size_t workers = prover::kDefaultWorkers, bool every_tenth = false);

struct LoopRound {
  std::size_t round = 0;
  std::size_t proved = 0;  // theorems with at least one ATP proof
  std::size_t added = 0;
};

struct LoopResult {
  learners::AtpProofs proofs;
  std::vector<LoopRound> trace;  // entry 0 is the input state
};

// Trains on the current proofs over the whole library, advises every proved
// theorem still lacking an ATP proof from earlier premises only, and adds
// the minimized proofs found. Stops after `rounds` or when a round adds none.
LoopResult improvement_loop(const corpus::Corpus& corpus,
                            const std::vector<features::FeatureSet>& features,
                            const learners::AtpProofs& initial, const EvalConfig& config,
                            std::size_t rounds);

std::size_t proved_count(const learners::AtpProofs& proofs);

// Adds every (theorem, prover) proof of `extra`, keeping the smaller set.
void merge_proofs(learners::AtpProofs& into, const learners::AtpProofs& extra);

// "<theorem> <prover>: <premise> ..." lines, sorted by theorem then prover.
void write_proofs(const learners::AtpProofs& proofs, std::ostream& out);
learners::AtpProofs read_proofs(std::istream& in);

}  // namespace hammerkit::eval

#endif  // HAMMERKIT_EVAL_H_
