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
// The desk-scale end-to-end run: ingest, features, re-proving, chronological
// evaluation with minimization, the improvement loop and the portfolio report.

#ifndef HAMMERKIT_PIPELINE_H_
#define HAMMERKIT_PIPELINE_H_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hammerkit/corpus.h"
#include "hammerkit/eval.h"
#include "hammerkit/features.h"
#include "hammerkit/fixture_prover.h"

namespace hammerkit::pipeline {

struct PipelineConfig {
  std::string data_dir;  // signature.txt, statements.tsv, deps.txt, trivial.txt
  features::NormMode mode = features::NormMode::kSymst;
  learners::LearnerConfig learner;
  std::string policy = "atponly";
  std::vector<std::size_t> slices = eval::kDefaultSlices;
  std::size_t rounds = 2;
  // The loop advises with these slices only, so that better rankings matter.
  std::vector<std::size_t> loop_slices = {8};
  double timelimit = 5;
  std::size_t workers = prover::kDefaultWorkers;
};

struct PipelineResult {
  std::size_t entries = 0;
  std::size_t evaluated = 0;
  eval::EvalResult reproving;
  eval::EvalResult advised;
  eval::LoopResult loop;
  eval::EvalMatrix matrix;  // re-proving and advised columns together
  eval::MetricsReport metrics;
  eval::DepComparison deps;
  std::string report;
};

std::vector<features::FeatureSet> corpus_features(const corpus::Corpus& corpus,
                                                  features::NormMode mode);

// Two syntactic fixture provers: "fixture" (depth 8) and "shallow" (depth 2).
std::vector<std::unique_ptr<prover::FixtureProver>> fixture_portfolio();

PipelineResult run_pipeline(const PipelineConfig& config);

}  // namespace hammerkit::pipeline

#endif  // HAMMERKIT_PIPELINE_H_
