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
#include "hammerkit/pipeline.h"

#include <sstream>

namespace hammerkit::pipeline {

std::vector<features::FeatureSet> corpus_features(const corpus::Corpus& corpus,
                                                  features::NormMode mode) {
  std::vector<features::FeatureSet> out;
  out.reserve(corpus.size());
  for (const auto& e : corpus.entries()) out.push_back(features::extract_features(e.statement, mode));
  return out;
}

std::vector<std::unique_ptr<prover::FixtureProver>> fixture_portfolio() {
  std::vector<std::unique_ptr<prover::FixtureProver>> out;
  out.push_back(std::make_unique<prover::FixtureProver>("fixture", 8));
  out.push_back(std::make_unique<prover::FixtureProver>("shallow", 2));
  return out;
}

namespace {

std::map<std::string, std::size_t> smallest_proofs(const learners::AtpProofs& proofs) {
  std::map<std::string, std::size_t> out;
  for (const auto& [name, by_prover] : proofs) {
    for (const auto& [p, premises] : by_prover) {
      auto it = out.find(name);
      if (it == out.end() || premises.size() < it->second) out[name] = premises.size();
    }
  }
  return out;
}

std::string render(const PipelineConfig& config, const PipelineResult& r) {
  std::ostringstream out;
  out << "hammerkit pipeline report\n";
  out << "entries: " << r.entries << "\n";
  out << "evaluated theorems: " << r.evaluated << "\n";
  out << "features: " << features::mode_name(config.mode) << "\n";
  out << "learner: " << learners::learner_label(config.learner) << "\n";
  out << "policy: " << config.policy << "\n";
  out << "slices:";
  for (auto s : config.slices) out << ' ' << s;
  out << "\nloop slices:";
  for (auto s : config.loop_slices) out << ' ' << s;
  out << "\n\n";

  out << "== Re-proving from recorded dependencies\n";
  out << "proved: " << eval::proved_count(r.reproving.proofs) << "\n\n";

  out << "== Portfolio\n" << eval::format_report(r.metrics) << "\n";
  out << "== Greedy cover\n" << eval::format_greedy(r.metrics.greedy, r.metrics.problems)
      << "\n";

  out << "== Improvement loop\n";
  out << "round proved added\n";
  for (const auto& step : r.loop.trace) {
    out << step.round << ' ' << step.proved << ' ' << step.added << "\n";
  }
  out << "\n== Dependencies: recorded vs smallest ATP proof\n";
  out << eval::format_comparison(r.deps);
  return out.str();
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config) {
  const std::string d = config.data_dir + "/";
  const auto corpus = corpus::Corpus::ingest_files(d + "statements.tsv", d + "deps.txt",
                                                   d + "trivial.txt", d + "signature.txt");
  const auto feats = corpus_features(corpus, config.mode);
  const auto owned = fixture_portfolio();
  std::vector<const prover::Prover*> provers;
  for (const auto& p : owned) provers.push_back(p.get());

  PipelineResult r;
  r.entries = corpus.size();
  for (std::size_t i = 0; i < corpus.size(); ++i) r.evaluated += eval::is_evaluated(corpus, i, false);

  r.reproving = eval::reprove(corpus, provers, config.timelimit, true, config.workers);

  eval::EvalConfig ec;
  ec.learner = config.learner;
  ec.policy = learners::parse_policy(config.policy);
  ec.slices = config.slices;
  ec.provers = provers;
  ec.timelimit = config.timelimit;
  ec.workers = config.workers;
  r.advised = eval::run_chronological_eval(corpus, feats, ec, r.reproving.proofs);

  eval::EvalConfig lc = ec;
  lc.slices = config.loop_slices;
  r.loop = eval::improvement_loop(corpus, feats, r.reproving.proofs, lc, config.rounds);

  r.matrix = r.reproving.matrix;
  r.matrix.merge(r.advised.matrix);
  r.metrics = eval::compute_metrics(r.matrix);

  std::map<std::string, std::size_t> recorded;
  for (const auto& e : corpus.entries()) {
    if (const auto* deps = corpus.deps(e.name)) {
      std::size_t n = 0;
      for (const auto& dep : *deps) n += !corpus.is_trivial(dep);
      recorded[e.name] = n;
    }
  }
  r.deps = eval::compare_dep_counts(recorded, smallest_proofs(r.loop.proofs));
  r.report = render(config, r);
  return r;
}

}  // namespace hammerkit::pipeline
