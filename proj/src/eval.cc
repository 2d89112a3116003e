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

#include "hammerkit/eval.h"

#include <algorithm>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "hammerkit/translate.h"

namespace hammerkit::eval {

namespace {

using learners::AtpProofs;
using prover::ProverRun;
using prover::Status;

struct Attempt {
  std::vector<prover::CsvRecord> runs;
  std::map<std::string, std::vector<std::string>> proofs;  // prover -> premises
};

// Runs every prover on every slice of `ranking`; identical problems (slices
// beyond the ranking length) are run once.
Attempt attempt(const corpus::Corpus& corpus, const std::string& name,
                const learners::Ranking& ranking, const std::vector<std::size_t>& slices,
                const std::vector<const prover::Prover*>& provers, const std::string& column_prefix,
                double timelimit, bool minimize, std::size_t workers) {
  struct Job {
    std::size_t slice;
    std::size_t size;
    const prover::Prover* prover;
  };
  std::vector<Job> jobs;
  std::map<std::pair<std::size_t, const prover::Prover*>, std::size_t> first;
  std::vector<std::size_t> source;
  for (std::size_t s : slices) {
    for (const prover::Prover* p : provers) {
      const std::size_t n = std::min(s, ranking.size());
      auto [it, fresh] = first.emplace(std::make_pair(n, p), jobs.size());
      source.push_back(it->second);
      jobs.push_back({s, n, p});
    }
  }
  std::vector<ProverRun> results(jobs.size());
  std::vector<std::size_t> unique;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    if (source[j] == j) unique.push_back(j);
  }
  prover::parallel_for(unique.size(), workers, [&](std::size_t u) {
    const Job& job = jobs[unique[u]];
    const std::vector<std::string> premises(ranking.begin(),
                                            ranking.begin() + static_cast<long>(job.size));
    results[unique[u]] = job.prover->run(
        make_problem(corpus, name, premises, name + "__" + std::to_string(job.slice),
                     job.prover->format()),
        timelimit);
  });
  Attempt out;
  std::map<const prover::Prover*, std::vector<std::string>> best;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    ProverRun run = results[source[j]];
    run.problem = name + "__" + std::to_string(jobs[j].slice);
    run.prover = column_prefix + jobs[j].prover->id();
    if (run.status == Status::kTheorem) {
      auto it = best.find(jobs[j].prover);
      if (it == best.end() || run.used_premises.size() < it->second.size()) {
        best[jobs[j].prover] = run.used_premises;
      }
    }
    out.runs.push_back({std::move(run), std::to_string(jobs[j].slice)});
  }
  for (const auto& [p, used] : best) {
    std::vector<std::string> premises = used;
    if (minimize) {
      auto build = [&, p = p](const std::vector<std::string>& ps) {
        return make_problem(corpus, name, ps, name + "__min" + std::to_string(ps.size()),
                            p->format());
      };
      prover::MinimizeResult m = prover::pseudo_minimize(*p, build, used, timelimit);
      if (m.proved) premises = m.premises;
    }
    out.proofs[p->id()] = premises;
  }
  return out;
}

void check_ranking(const corpus::Corpus& corpus, std::size_t index,
                   const learners::Ranking& ranking) {
  for (const auto& r : ranking) {
    if (corpus.get(r).index >= index) {
      throw corpus::ChronologyError("ranking for " + corpus.at(index).name + " contains " + r);
    }
  }
}

std::unique_ptr<learners::Learner> new_learner(const EvalConfig& config) {
  return config.factory ? config.factory() : learners::make_learner(config.learner);
}

learners::DepPolicy effective_policy(const corpus::Corpus& corpus, learners::DepPolicy policy,
                                     const AtpProofs& known) {
  const bool weighted = policy.kind == learners::PolicyKind::kMinweight ||
                        policy.kind == learners::PolicyKind::kNominweight;
  if (weighted && policy.likelihood.empty()) {
    policy.likelihood = learners::usage_likelihood(corpus, known, policy.pref);
  }
  return policy;
}

}  // namespace

bool is_evaluated(const corpus::Corpus& corpus, std::size_t index, bool every_tenth) {
  const corpus::TheoremEntry& e = corpus.at(index);
  if (e.kind != corpus::Kind::kProved || corpus.is_trivial(e.name)) return false;
  return !every_tenth || index % 10 == 0;
}

std::vector<std::string> candidates_before(const corpus::Corpus& corpus, std::size_t index) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < index && i < corpus.size(); ++i) {
    if (!corpus.is_trivial(corpus.at(i).name)) out.push_back(corpus.at(i).name);
  }
  return out;
}

prover::Problem make_problem(const corpus::Corpus& corpus, const std::string& goal,
                             const std::vector<std::string>& premises, const std::string& id,
                             tptp::Format format) {
  std::vector<tptp::NamedFormula> named;
  for (const auto& p : premises) named.push_back({p, corpus.get(p).statement});
  return {id, tptp::translate(format, corpus.get(goal).statement, named, corpus.signature())};
}

EvalResult run_chronological_eval(const corpus::Corpus& corpus,
                                  const std::vector<features::FeatureSet>& features,
                                  const EvalConfig& config, const AtpProofs& known) {
  if (features.size() != corpus.size()) {
    throw std::invalid_argument("feature table does not match corpus size");
  }
  const learners::DepPolicy policy = effective_policy(corpus, config.policy, known);
  std::unique_ptr<learners::Learner> learner = new_learner(config);
  const std::string prefix = learners::learner_label(config.learner) + "/";
  EvalResult result;
  AtpProofs all = known;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string& name = corpus.at(i).name;
    if (learner->examples() != i) {
      throw std::logic_error("model has seen " + std::to_string(learner->examples()) +
                             " examples when predicting theorem " + std::to_string(i));
    }
    if (is_evaluated(corpus, i, config.every_tenth)) {
      const learners::Ranking ranking = learner->rank(features[i], candidates_before(corpus, i));
      check_ranking(corpus, i, ranking);
      ++result.predictions;
      Attempt a = attempt(corpus, name, ranking, config.slices, config.provers, prefix,
                          config.timelimit, config.minimize, config.workers);
      for (auto& rec : a.runs) {
        result.matrix.set(name, rec.run.prover + "/" + rec.slice, rec.run.status);
        result.runs.push_back(std::move(rec));
      }
      if (!a.proofs.empty()) {
        learners::AtpProofs found{{name, a.proofs}};
        merge_proofs(result.proofs, found);
        merge_proofs(all, found);
      }
    }
    learner->update(learners::make_example(corpus, i, features[i], all, policy));
  }
  return result;
}

EvalResult reprove(const corpus::Corpus& corpus, const std::vector<const prover::Prover*>& provers,
                   double timelimit, bool minimize, std::size_t workers, bool every_tenth) {
  std::vector<std::pair<std::size_t, const prover::Prover*>> jobs;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!is_evaluated(corpus, i, every_tenth)) continue;
    for (const prover::Prover* p : provers) jobs.emplace_back(i, p);
  }
  std::vector<ProverRun> runs(jobs.size());
  std::vector<std::vector<std::string>> minimized(jobs.size());
  prover::parallel_for(jobs.size(), workers, [&](std::size_t j) {
    const auto& [i, p] = jobs[j];
    const std::string& name = corpus.at(i).name;
    std::vector<std::string> deps;
    for (const auto& d : *corpus.deps(name)) {
      if (!corpus.is_trivial(d)) deps.push_back(d);
    }
    runs[j] = p->run(make_problem(corpus, name, deps, name + "__deps", p->format()), timelimit);
    runs[j].problem = name + "__deps";
    if (runs[j].status != Status::kTheorem) return;
    minimized[j] = runs[j].used_premises;
    if (!minimize) return;
    auto build = [&](const std::vector<std::string>& ps) {
      return make_problem(corpus, name, ps, name + "__min" + std::to_string(ps.size()),
                          p->format());
    };
    prover::MinimizeResult m = prover::pseudo_minimize(*p, build, runs[j].used_premises, timelimit);
    if (m.proved) minimized[j] = m.premises;
  });
  EvalResult result;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const std::string& name = corpus.at(jobs[j].first).name;
    result.matrix.set(name, jobs[j].second->id(), runs[j].status);
    if (runs[j].status == Status::kTheorem) {
      merge_proofs(result.proofs, {{name, {{jobs[j].second->id(), minimized[j]}}}});
    }
    result.runs.push_back({runs[j], "-"});
  }
  result.predictions = 0;
  return result;
}

LoopResult improvement_loop(const corpus::Corpus& corpus,
                            const std::vector<features::FeatureSet>& features,
                            const AtpProofs& initial, const EvalConfig& config,
                            std::size_t rounds) {
  LoopResult result{initial, {{0, proved_count(initial), 0}}};
  for (std::size_t round = 1; round <= rounds; ++round) {
    const learners::DepPolicy policy = effective_policy(corpus, config.policy, result.proofs);
    std::unique_ptr<learners::Learner> learner = new_learner(config);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      learner->update(learners::make_example(corpus, i, features[i], result.proofs, policy));
    }
    std::vector<std::size_t> targets;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      auto it = result.proofs.find(corpus.at(i).name);
      const bool has_proof = it != result.proofs.end() && !it->second.empty();
      if (!has_proof && is_evaluated(corpus, i, config.every_tenth)) targets.push_back(i);
    }
    std::vector<std::map<std::string, std::vector<std::string>>> found(targets.size());
    prover::parallel_for(targets.size(), config.workers, [&](std::size_t t) {
      const std::size_t i = targets[t];
      const learners::Ranking ranking = learner->rank(features[i], candidates_before(corpus, i));
      check_ranking(corpus, i, ranking);
      found[t] = attempt(corpus, corpus.at(i).name, ranking, config.slices, config.provers, "",
                         config.timelimit, config.minimize, 1)
                     .proofs;
    });
    std::size_t added = 0;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (found[t].empty()) continue;
      ++added;
      merge_proofs(result.proofs, {{corpus.at(targets[t]).name, found[t]}});
    }
    result.trace.push_back({round, proved_count(result.proofs), added});
    if (added == 0) break;
  }
  return result;
}

std::size_t proved_count(const AtpProofs& proofs) {
  std::size_t n = 0;
  for (const auto& [name, by_prover] : proofs) n += !by_prover.empty();
  return n;
}

void merge_proofs(AtpProofs& into, const AtpProofs& extra) {
  for (const auto& [name, by_prover] : extra) {
    for (const auto& [p, premises] : by_prover) {
      auto& slot = into[name];
      auto it = slot.find(p);
      if (it == slot.end() || premises.size() < it->second.size()) slot[p] = premises;
    }
  }
}

void write_proofs(const AtpProofs& proofs, std::ostream& out) {
  for (const auto& [theorem, by_prover] : proofs) {
    for (const auto& [prover_id, premises] : by_prover) {
      out << theorem << ' ' << prover_id << ':';
      for (const auto& p : premises) out << ' ' << p;
      out << '\n';
    }
  }
}

AtpProofs read_proofs(std::istream& in) {
  AtpProofs out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    std::istringstream head(line.substr(0, colon == std::string::npos ? 0 : colon));
    std::string theorem, prover_id;
    if (colon == std::string::npos || !(head >> theorem >> prover_id)) {
      throw std::runtime_error("proofs line " + std::to_string(lineno) + ": expected "
                               "'<theorem> <prover>: premises'");
    }
    std::istringstream rest(line.substr(colon + 1));
    auto& premises = out[theorem][prover_id];
    premises.clear();
    for (std::string p; rest >> p;) premises.push_back(p);
  }
  return out;
}

}  // namespace hammerkit::eval
