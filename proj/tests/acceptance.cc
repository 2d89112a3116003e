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
// Acceptance run. Prints one PASS/FAIL line per criterion with its runtime
// and exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "feature_oracle.h"
#include "hammerkit/advisor_service.h"
#include "hammerkit/corpus.h"
#include "hammerkit/eval.h"
#include "hammerkit/features.h"
#include "hammerkit/fixture_prover.h"
#include "hammerkit/knn.h"
#include "hammerkit/minimize.h"
#include "hammerkit/naive_bayes.h"
#include "hammerkit/pipeline.h"
#include "hammerkit/translate.h"
#include "learner_oracle.h"
#include "metrics_oracle.h"
#include "term_gen.h"
#include "test_util.h"

namespace hk = hammerkit;

namespace {

// Thrown by `require` with a description of the first violation.
struct Violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Violation(what);
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: no runtime bound
  std::function<std::string()> body;  // returns a short summary
};

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------

std::string translation_goldens() {
  hk::testing::Fixture fx("real_eq_inv");
  const hk::hol::Term goal = fx.stmt.at("REAL_EQ_INV");
  const std::vector<hk::tptp::NamedFormula> premises{{"REAL_INV_INV", fx.stmt.at("REAL_INV_INV")}};
  int lines = 0;
  for (auto [format, file] : {std::pair{hk::tptp::Format::kFof, "expected.fof.p"},
                              std::pair{hk::tptp::Format::kTff1, "expected.tff1.p"}}) {
    const std::string got = hk::tptp::translate(format, goal, premises, fx.sig).serialize();
    const std::string want = hk::testing::read_file(hk::testing::data_path(std::string("real_eq_inv/") + file));
    require(got == want, std::string("output differs from ") + file + ":\n" + got);
    int formulas = 0;
    for (const auto& l : hk::testing::split_lines(want)) {
      formulas += l.rfind("fof(", 0) == 0 || (l.rfind("tff(", 0) == 0 && l.find(", type,") == std::string::npos);
    }
    require(formulas == 6, std::string(file) + " has " + std::to_string(formulas) + " formula lines");
    lines += formulas;
  }

  hk::testing::Fixture id("i_o_id");
  const auto thf = hk::tptp::translate(hk::tptp::Format::kThf, id.stmt.at("I_O_ID"),
                                       {{"I_THM", id.stmt.at("I_THM")}}, id.sig)
                       .serialize();
  const auto got = hk::testing::split_lines(thf);
  const auto expected =
      hk::testing::split_lines(hk::testing::read_file(hk::testing::data_path("i_o_id/expected_instances.thf.p")));
  for (const auto& e : expected) {
    require(std::find(got.begin(), got.end(), e) != got.end(), "missing THF line: " + e);
  }
  int mono = 0;
  for (const auto& l : got) mono += l.find("_monomorphized") != std::string::npos;
  require(mono == 2, "expected 2 monomorphized axioms, got " + std::to_string(mono));
  return std::to_string(lines) + " FOF/TFF1 formula lines identical, 2 THF instances";
}

// ---------------------------------------------------------------------------

std::string feature_oracle() {
  using hk::features::NormMode;
  hk::testing::Fixture fx("discrete_imp_closed");
  const auto got = hk::features::extract_features(fx.stmt.at("DISCRETE_IMP_CLOSED"), NormMode::kSymst);
  const auto mapping =
      hk::testing::read_mapping(hk::testing::data_path("discrete_imp_closed/symst_mapping.tsv"));
  std::set<std::string> listed, ours;
  for (const auto& [l, o] : mapping) {
    listed.insert(l);
    ours.insert(o);
  }
  require(listed.size() == mapping.size() && ours.size() == mapping.size(),
          "mapping is not one-to-one");
  require(std::set<std::string>(got.begin(), got.end()) == ours,
          "extracted set differs from the mapping image");

  std::size_t terms = 0;
  for (unsigned seed : {1u, 2u, 3u}) {
    hk::testing::TermGen gen(seed);
    for (int i = 0; i < 1000; ++i, ++terms) {
      const hk::hol::Term t = hk::hol::beta_normalize(gen.boolean(4));
      const hk::hol::Term renamed = hk::testing::rename_bound(t, "r" + std::to_string(i) + "_");
      for (NormMode m : {NormMode::kSyms0, NormMode::kSyms, NormMode::kSymst, NormMode::kSymsd}) {
        const auto f = hk::features::extract_features(t, m);
        require(f == hk::features::extract_features(renamed, m),
                "alpha variance on " + hk::hol::print_term(t));
        std::string missing;
        require(hk::testing::subterm_closed(f, &missing),
                "not subterm closed (" + missing + ") on " + hk::hol::print_term(t));
      }
    }
  }
  return std::to_string(mapping.size()) + " features in bijection; " + std::to_string(terms) +
         " generated terms alpha-invariant and subterm-closed";
}

// ---------------------------------------------------------------------------

std::string learner_oracle() {
  std::mt19937 rng(2013);
  std::size_t queries = 0;
  for (int model = 0; model < 200; ++model) {
    const auto r = hk::testing::random_stream(rng, 20, 30);
    hk::learners::NbModel nb;
    for (const auto& e : r.examples) nb.update(e);
    const auto dense = hk::testing::dense_nb(r);
    const std::size_t k = 1 + rng() % (r.examples.size() + 3);
    hk::learners::KnnStore knn(k);
    for (const auto& e : r.examples) knn.update(e);
    for (const auto& q : r.queries) {
      const auto query = hk::testing::query_set(r, q);
      require(nb.rank(query, r.labels) == hk::testing::nb_oracle(r, dense, q),
              "naive Bayes order differs on model " + std::to_string(model));
      require(knn.rank(query, r.labels) == hk::testing::knn_oracle(r, q, k),
              "k-NN order differs on model " + std::to_string(model));
      ++queries;
    }
  }
  return "200 random models, " + std::to_string(queries) + " queries, NB and k-NN orders exact";
}

// ---------------------------------------------------------------------------

hk::eval::EvalMatrix from_sets(const std::vector<std::pair<std::string, std::set<int>>>& sets,
                               int problems) {
  hk::eval::EvalMatrix m;
  for (const auto& [name, solved] : sets) {
    for (int p = 0; p < problems; ++p) {
      m.set("p" + std::to_string(p), name,
            solved.count(p) ? hk::prover::Status::kTheorem : hk::prover::Status::kGaveUp);
    }
  }
  return m;
}

const hk::eval::MethodMetrics& method(const hk::eval::MetricsReport& r, const std::string& name) {
  for (const auto& m : r.methods) {
    if (m.method == name) return m;
  }
  throw Violation("missing method " + name);
}

std::string metrics_oracle() {
  auto shared = hk::eval::compute_metrics(from_sets({{"a", {0}}, {"b", {0}}}, 1));
  require(method(shared, "a").sotac == 0.5 && method(shared, "b").sotac == 0.5,
          "shared problem SOTAC is not 0.5/0.5");
  auto alone = hk::eval::compute_metrics(from_sets({{"a", {0, 1, 2}}}, 3));
  require(method(alone, "a").sotac == 1.0 && method(alone, "a").sum_sotac == 3.0,
          "lone solver SOTAC is not 1.0 / 3.0");

  std::mt19937 rng(4);
  for (int round = 0; round < 100; ++round) {
    const auto t = hk::testing::random_table(rng, 15, 40);
    const auto m = hk::testing::to_matrix(t);
    for (bool cs : {false, true}) {
      const auto r = hk::eval::compute_metrics(m, {cs});
      for (std::size_t k = 0; k < t.methods.size(); ++k) {
        const auto o = hk::testing::oracle_metrics(t, k, cs);
        const auto& got = method(r, t.methods[k]);
        require(got.solved == o.solved && got.unique == o.unique && got.countersat == o.countersat &&
                    std::abs(got.sum_sotac - o.sum_sotac) < 1e-9 &&
                    std::abs(got.sotac - o.sotac) < 1e-9,
                "metrics differ for " + t.methods[k] + " on matrix " + std::to_string(round));
      }
    }
    const auto steps = hk::eval::greedy_cover(m);
    const auto best = hk::testing::optimal_cover_by_size(t);
    const std::size_t total = steps.empty() ? 0 : steps.back().cumulative;
    require(static_cast<int>(total) == best.back(),
            "greedy total coverage differs from exhaustive on matrix " + std::to_string(round));
    for (std::size_t i = 0; i < steps.size(); ++i) {
      require(steps[i].cumulative >= (1 - std::exp(-1.0)) * best[i + 1],
              "greedy prefix below the 1-1/e bound on matrix " + std::to_string(round));
      require(i == 0 || steps[i].gain <= steps[i - 1].gain,
              "greedy gains increased on matrix " + std::to_string(round));
    }
  }
  return "SOTAC cases exact; 100 random matrices match recount and exhaustive cover";
}

// ---------------------------------------------------------------------------

std::string pipeline_report() {
  hk::pipeline::PipelineConfig cfg;
  cfg.data_dir = hk::testing::data_path("synthetic");
  const auto r = hk::pipeline::run_pipeline(cfg);
  const std::string want = hk::testing::read_file(hk::testing::data_path("synthetic/report.txt"));
  if (r.report != want) {
    const auto a = hk::testing::split_lines(r.report);
    const auto b = hk::testing::split_lines(want);
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    throw Violation("report differs at line " + std::to_string(i + 1) + ": got '" +
                    (i < a.size() ? a[i] : "<end>") + "', want '" +
                    (i < b.size() ? b[i] : "<end>") + "'");
  }
  std::ostringstream trace;
  for (std::size_t i = 0; i < r.loop.trace.size(); ++i) {
    if (i) {
      require(r.loop.trace[i].proved >= r.loop.trace[i - 1].proved,
              "loop proved count decreased at round " + std::to_string(i));
      trace << "->";
    }
    trace << r.loop.trace[i].proved;
  }
  return std::to_string(r.entries) + " entries, report identical, loop proved " + trace.str();
}

// ---------------------------------------------------------------------------

// Wraps a learner and records what it is asked.
class SpyLearner : public hk::learners::Learner {
 public:
  SpyLearner(std::unique_ptr<hk::learners::Learner> inner, std::vector<std::size_t>* counts,
             std::vector<std::vector<std::string>>* candidates)
      : inner_(std::move(inner)), counts_(counts), candidates_(candidates) {}
  std::string kind() const override { return inner_->kind(); }
  void update(const hk::learners::TrainingExample& e) override { inner_->update(e); }
  hk::learners::Ranking rank(const hk::features::FeatureSet& q,
                             const std::vector<std::string>& c) const override {
    counts_->push_back(inner_->examples());
    candidates_->push_back(c);
    return inner_->rank(q, c);
  }
  std::size_t examples() const override { return inner_->examples(); }
  void save(std::ostream& out) const override { inner_->save(out); }

 private:
  std::unique_ptr<hk::learners::Learner> inner_;
  std::vector<std::size_t>* counts_;
  std::vector<std::vector<std::string>>* candidates_;
};

// Proves a goal when one designated premise is present; records premises.
class RecordingProver : public hk::prover::Prover {
 public:
  RecordingProver(std::map<std::string, std::string> needs) : needs_(std::move(needs)) {}
  std::string id() const override { return "rec"; }
  hk::tptp::Format format() const override { return hk::tptp::Format::kFof; }
  hk::prover::ProverRun run(const hk::prover::Problem& p, double) const override {
    hk::prover::ProverRun run{id(), p.id, hk::prover::Status::kGaveUp, 0, {}, ""};
    const std::string goal = p.id.substr(0, p.id.find("__"));
    std::vector<std::string> names;
    for (const auto& [label, name] : p.fo.premise_labels) names.push_back(name);
    {
      std::lock_guard<std::mutex> lock(mu_);
      seen_.emplace_back(goal, names);
    }
    auto it = needs_.find(goal);
    if (it != needs_.end() && std::count(names.begin(), names.end(), it->second)) {
      run.status = hk::prover::Status::kTheorem;
      run.used_premises = {it->second};
    }
    return run;
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> seen() const {
    std::lock_guard<std::mutex> lock(mu_);
    return seen_;
  }

 private:
  std::map<std::string, std::string> needs_;
  mutable std::mutex mu_;
  mutable std::vector<std::pair<std::string, std::vector<std::string>>> seen_;
};

// Used premises are a pseudo-random subset of the offered ones; fails when a
// designated core premise is missing.
class SubsetProver : public hk::prover::Prover {
 public:
  SubsetProver(unsigned seed, std::set<std::string> core) : seed_(seed), core_(std::move(core)) {}
  std::string id() const override { return "subset"; }
  hk::tptp::Format format() const override { return hk::tptp::Format::kFof; }
  hk::prover::ProverRun run(const hk::prover::Problem& p, double) const override {
    hk::prover::ProverRun run{id(), p.id, hk::prover::Status::kGaveUp, 0, {}, ""};
    std::set<std::string> offered;
    for (const auto& [label, name] : p.fo.premise_labels) offered.insert(name);
    for (const auto& c : core_) {
      if (!offered.count(c)) return run;
    }
    std::mt19937 rng(seed_ + static_cast<unsigned>(offered.size()));
    for (const auto& name : offered) {
      if (core_.count(name) || rng() % 3 == 0) run.used_premises.push_back(name);
    }
    run.status = hk::prover::Status::kTheorem;
    return run;
  }

 private:
  unsigned seed_;
  std::set<std::string> core_;
};

hk::corpus::Corpus random_atom_corpus(std::mt19937& rng, std::size_t n,
                                      std::vector<hk::features::FeatureSet>& feats,
                                      std::map<std::string, std::string>& needs) {
  std::vector<hk::hol::Statement> statements;
  std::vector<hk::corpus::DepRecord> deps;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string name = "T" + std::to_string(1000 + i);
    statements.push_back({name, "(c k" + std::to_string(i) + " bool)"});
    hk::features::FeatureSet f;
    for (int j = 0; j < 6; ++j) {
      if (rng() % 3 == 0) f.push_back("f" + std::to_string(j));
    }
    f.push_back("g" + std::to_string(i % 7));
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    feats.push_back(f);
    if (i > 0 && rng() % 2) {
      std::vector<std::string> d;
      for (std::size_t j = 0; j < i; ++j) {
        if (rng() % 4 == 0) d.push_back("T" + std::to_string(1000 + j));
      }
      if (d.empty()) d.push_back("T" + std::to_string(1000 + rng() % i));
      needs[name] = d[rng() % d.size()];
      deps.push_back({name, d});
    }
  }
  return hk::corpus::Corpus::ingest(statements, deps, {});
}

std::set<long> reach_oracle(const hk::corpus::RawDeps& raw, const std::map<long, std::string>& names,
                            long id) {
  std::set<long> out, seen;
  std::vector<long> stack;
  if (raw.count(id)) stack = raw.at(id);
  while (!stack.empty()) {
    const long n = stack.back();
    stack.pop_back();
    if (names.count(n)) {
      out.insert(n);
    } else if (seen.insert(n).second && raw.count(n)) {
      for (long d : raw.at(n)) stack.push_back(d);
    }
  }
  return out;
}

std::string invariants() {
  std::size_t rankings = 0, problems = 0, minimizations = 0, dags = 0, betas = 0;
  for (unsigned seed : {1u, 2u, 3u}) {
    std::mt19937 rng(seed);

    // Chronology and predict-then-train, for both learners.
    std::vector<hk::features::FeatureSet> feats;
    std::map<std::string, std::string> needs;
    const auto corpus = random_atom_corpus(rng, 60, feats, needs);
    for (const char* kind : {"nb", "knn"}) {
      std::vector<std::size_t> counts;
      std::vector<std::vector<std::string>> candidates;
      RecordingProver prover(needs);
      hk::eval::EvalConfig cfg;
      cfg.provers = {&prover};
      cfg.slices = {2, 8};
      cfg.learner = {kind, 5};
      cfg.factory = [&] {
        return std::make_unique<SpyLearner>(hk::learners::make_learner(cfg.learner), &counts,
                                            &candidates);
      };
      const auto r = hk::eval::run_chronological_eval(corpus, feats, cfg);
      std::vector<std::size_t> evaluated;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (hk::eval::is_evaluated(corpus, i, false)) evaluated.push_back(i);
      }
      require(counts.size() == evaluated.size(), "prediction count mismatch");
      for (std::size_t j = 0; j < counts.size(); ++j) {
        require(counts[j] == evaluated[j],
                "model had " + std::to_string(counts[j]) + " examples when predicting entry " +
                    std::to_string(evaluated[j]));
        for (const auto& c : candidates[j]) {
          require(corpus.get(c).index < evaluated[j], "future candidate " + c);
        }
        ++rankings;
      }
      for (const auto& [goal, premises] : prover.seen()) {
        const std::size_t gi = corpus.get(goal).index;
        for (const auto& p : premises) {
          require(corpus.get(p).index < gi, "premise " + p + " is not older than " + goal);
        }
        ++problems;
      }
      for (const auto& [theorem, by_prover] : r.proofs) {
        for (const auto& [p, used] : by_prover) {
          for (const auto& u : used) {
            require(corpus.get(u).index < corpus.get(theorem).index, "future premise in proof");
          }
        }
      }
    }

    // Pseudo-minimization shrinks monotonically and stays inside its input.
    for (int round = 0; round < 100; ++round) {
      const int n = 2 + static_cast<int>(rng() % 30);
      std::vector<std::string> premises;
      std::set<std::string> core;
      for (int i = 0; i < n; ++i) {
        premises.push_back("P" + std::to_string(i));
        if (rng() % 5 == 0) core.insert(premises.back());
      }
      SubsetProver prover(seed * 1000 + round, core);
      auto build = [](const std::vector<std::string>& ps) {
        hk::prover::Problem p{"g", {}};
        for (const auto& name : ps) {
          p.fo.axioms.emplace_back("a" + name, "p");
          p.fo.premise_labels["a" + name] = name;
        }
        return p;
      };
      const auto r = hk::prover::pseudo_minimize(prover, build, premises, 1);
      require(r.proved, "minimization lost the proof");
      for (std::size_t i = 1; i < r.sizes.size(); ++i) {
        require(r.sizes[i] <= r.sizes[i - 1], "minimization sizes increased");
      }
      for (const auto& p : r.premises) {
        require(std::count(premises.begin(), premises.end(), p), "minimized set left its input");
      }
      for (const auto& c : core) {
        require(std::count(r.premises.begin(), r.premises.end(), c), "minimized set lost a core premise");
      }
      ++minimizations;
    }

    // Dependency expansion through unnamed entries.
    for (int round = 0; round < 100; ++round) {
      const int n = 2 + static_cast<int>(rng() % 49);
      hk::corpus::RawDeps raw;
      std::map<long, std::string> names;
      for (int i = 0; i < n; ++i) {
        if (rng() % 2) names[i] = "N" + std::to_string(i);
        for (int j = 0; j < i; ++j) {
          if (rng() % 5 == 0) raw[i].push_back(j);
        }
      }
      for (const auto& [id, deps] : hk::corpus::expand_unnamed(raw, names)) {
        const std::set<long> got(deps.begin(), deps.end());
        require(got.size() == deps.size(), "duplicate in expanded deps");
        require(got == reach_oracle(raw, names, id), "expanded deps differ from reachability");
      }
      ++dags;
    }

    // Beta normalization is idempotent.
    hk::testing::TermGen gen(seed);
    for (int i = 0; i < 300; ++i) {
      const hk::hol::Term n = hk::hol::beta_normalize(gen.boolean(5));
      require(!hk::hol::has_beta_redex(n), "redex left after normalization");
      require(hk::hol::beta_normalize(n) == n, "normalization is not idempotent");
      ++betas;
    }
  }
  std::ostringstream out;
  out << rankings << " rankings, " << problems << " problems, " << minimizations
      << " minimizations, " << dags << " DAGs, " << betas << " terms; 0 violations";
  return out.str();
}

// ---------------------------------------------------------------------------

std::string service_contract() {
  const std::string dir = hk::testing::data_path("real_eq_inv/");
  const auto corpus = hk::corpus::Corpus::ingest_files(dir + "statements.tsv", dir + "deps.txt",
                                                       dir + "trivial.txt", dir + "signature.txt");
  hk::learners::NbModel model;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    model.update(hk::learners::make_example(
        corpus, i,
        hk::features::extract_features(corpus.at(i).statement, hk::features::NormMode::kSymst),
        {}, hk::learners::parse_policy("symsonly")));
  }
  std::ostringstream before;
  model.save(before);

  hk::prover::FixtureProver fixture;
  hk::service::ServiceConfig cfg;
  cfg.host = "127.0.0.1";
  cfg.port = 0;
  cfg.provers = {&fixture};
  cfg.budget = 5;
  hk::service::AdvisorService service(corpus, model, cfg);
  service.start();

  const std::string proved_query =
      "(! (z real) (app (c eq (fun real (fun real bool))) (app (c inv (fun real real)) "
      "(app (c inv (fun real real)) (v z real))) (v z real)))";
  const std::string open_query =
      "(! (z real) (app (c eq (fun real (fun real bool))) (app (c inv (fun real real)) (v z real)) "
      "(v z real)))";
  const int port = service.port();
  const std::string proved = hk::service::query("127.0.0.1", port, proved_query);
  require(proved.rfind("PROVED fixture ", 0) == 0 && proved.find("REAL_INV_INV") != std::string::npos,
          "expected PROVED with REAL_INV_INV, got: " + proved);
  const std::string parse = hk::service::query("127.0.0.1", port, "(((");
  require(parse.rfind("ERROR parse:", 0) == 0, "expected ERROR parse, got: " + parse);
  const std::string ranking = hk::service::query("127.0.0.1", port, open_query);
  require(ranking.rfind("RANKING ", 0) == 0, "expected RANKING, got: " + ranking);
  std::istringstream words(ranking.substr(8));
  const std::vector<std::string> names{std::istream_iterator<std::string>(words), {}};
  std::size_t non_trivial = 0;
  for (const auto& e : corpus.entries()) non_trivial += !corpus.is_trivial(e.name);
  require(names.size() == std::min<std::size_t>(32, non_trivial), "RANKING length is wrong");

  std::vector<std::future<std::pair<std::string, double>>> answers;
  for (int i = 0; i < 14; ++i) {
    answers.push_back(std::async(std::launch::async, [&, i] {
      const auto start = std::chrono::steady_clock::now();
      std::string r = hk::service::query("127.0.0.1", port, i % 2 ? proved_query : open_query);
      return std::make_pair(r, elapsed(start));
    }));
  }
  double worst = 0;
  for (int i = 0; i < 14; ++i) {
    auto [r, secs] = answers[i].get();
    worst = std::max(worst, secs);
    require(r == (i % 2 ? proved : ranking), "concurrent answer differs: " + r);
  }
  require(worst <= cfg.budget + 2, "slowest concurrent query took " + std::to_string(worst) + "s");
  service.stop();
  std::ostringstream after;
  model.save(after);
  require(before.str() == after.str(), "model changed while serving");
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << "PROVED / ERROR parse / RANKING over TCP; 14 concurrent queries, slowest "
      << worst << "s (budget " << cfg.budget << "s + 2s)";
  return out.str();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "translation golden files", 1, translation_goldens},
      {2, "feature oracle and term properties", 0, feature_oracle},
      {3, "learner oracle equivalence", 10, learner_oracle},
      {4, "metrics oracle", 5, metrics_oracle},
      {5, "end-to-end synthetic pipeline", 60, pipeline_report},
      {6, "invariant suite", 0, invariants},
      {7, "service contract", 0, service_contract},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs = elapsed(start);
    if (ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      ok = false;
      detail = "took " + std::to_string(secs) + "s, limit " + std::to_string(c.limit_seconds) + "s";
    }
    failed += !ok;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs << "s";
    std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << time.str()
              << "): " << detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
