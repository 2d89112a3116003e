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

#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "hammerkit/fixture_prover.h"
#include "hammerkit/knn.h"
#include "hammerkit/naive_bayes.h"

namespace hammerkit::eval {
namespace {

using learners::AtpProofs;
using prover::Status;

// Proves a goal exactly when its problem contains the premise it needs.
using Needs = std::map<std::string, std::string>;

class NeedsProver : public prover::Prover {
 public:
  explicit NeedsProver(Needs needs) : needs_(std::move(needs)) {}
  std::string id() const override { return "needs"; }
  tptp::Format format() const override { return tptp::Format::kFof; }
  prover::ProverRun run(const prover::Problem& p, double) const override {
    prover::ProverRun run{id(), p.id, Status::kGaveUp, 0, {}, ""};
    const std::string goal = p.id.substr(0, p.id.find("__"));
    auto it = needs_.find(goal);
    if (it == needs_.end()) return run;
    for (const auto& [label, name] : p.fo.premise_labels) {
      if (name == it->second) {
        run.status = Status::kTheorem;
        run.used_premises = {name};
      }
    }
    return run;
  }

 private:
  std::map<std::string, std::string> needs_;
};

corpus::Corpus atoms_corpus(const std::vector<std::string>& names,
                            const std::vector<corpus::DepRecord>& deps) {
  std::vector<hol::Statement> st;
  for (const auto& n : names) st.push_back({n, "(c c" + n + " bool)"});
  return corpus::Corpus::ingest(st, deps, {});
}

TEST(Chronological, SingleTheoremUsesFallback) {
  auto c = atoms_corpus({"A"}, {{"A", {}}});
  prover::FixtureProver fx;
  EvalConfig cfg;
  cfg.provers = {&fx};
  auto r = run_chronological_eval(c, {{"f"}}, cfg);
  EXPECT_EQ(r.predictions, 1u);
  EXPECT_EQ(r.runs.size(), 4u);
  EXPECT_EQ(r.matrix.methods().front(), "nb/fixture/8");
  EXPECT_EQ(r.runs[0].run.status, Status::kGaveUp);
}

TEST(Chronological, DependencyRankedFirstSolvesAtSlice8) {
  std::vector<std::string> names;
  std::vector<features::FeatureSet> feats;
  for (int i = 0; i < 20; ++i) {
    names.push_back("F" + std::to_string(100 + i));
    feats.push_back({"g" + std::to_string(i)});
  }
  names.push_back("D");
  feats.push_back({"k1", "k2", "k3"});
  for (int i = 0; i < 5; ++i) {
    names.push_back("G" + std::to_string(i));
    feats.push_back({"h" + std::to_string(i)});
  }
  names.push_back("T");
  feats.push_back({"k1", "k2", "k3"});
  auto c = atoms_corpus(names, {{"T", {"F100"}}});
  NeedsProver prover(Needs{{"T", "D"}});
  EvalConfig cfg;
  cfg.provers = {&prover};
  cfg.slices = {1, 8, 32};
  auto r = run_chronological_eval(c, feats, cfg);
  const std::size_t t = std::find(r.matrix.problems().begin(), r.matrix.problems().end(), "T") -
                        r.matrix.problems().begin();
  for (std::size_t m = 0; m < r.matrix.methods().size(); ++m) {
    EXPECT_EQ(r.matrix.get(t, m), Status::kTheorem) << r.matrix.methods()[m];
  }
  EXPECT_EQ(r.proofs.at("T").at("needs"), (std::vector<std::string>{"D"}));
}

TEST(Chronological, DeterministicRerun) {
  auto c = corpus::Corpus::ingest_files(
      std::string(HAMMERKIT_TEST_DATA) + "/real_eq_inv/statements.tsv",
      std::string(HAMMERKIT_TEST_DATA) + "/real_eq_inv/deps.txt",
      std::string(HAMMERKIT_TEST_DATA) + "/real_eq_inv/trivial.txt",
      std::string(HAMMERKIT_TEST_DATA) + "/real_eq_inv/signature.txt");
  std::vector<features::FeatureSet> feats;
  for (const auto& e : c.entries()) {
    feats.push_back(features::extract_features(e.statement, features::NormMode::kSymst));
  }
  prover::FixtureProver fx;
  EvalConfig cfg;
  cfg.provers = {&fx};
  auto a = run_chronological_eval(c, feats, cfg);
  auto b = run_chronological_eval(c, feats, cfg);
  ASSERT_EQ(a.runs.size(), b.runs.size());
  for (std::size_t i = 0; i < a.runs.size(); ++i) {
    EXPECT_EQ(prover::csv_row(a.runs[i].run, a.runs[i].slice),
              prover::csv_row(b.runs[i].run, b.runs[i].slice));
  }
}

// Returns every candidate plus a name from the future.
class LeakyLearner : public learners::Learner {
 public:
  explicit LeakyLearner(std::string leak) : leak_(std::move(leak)) {}
  std::string kind() const override { return "leaky"; }
  void update(const learners::TrainingExample&) override { ++n_; }
  learners::Ranking rank(const features::FeatureSet&,
                         const std::vector<std::string>& c) const override {
    learners::Ranking r = c;
    r.push_back(leak_);
    return r;
  }
  std::size_t examples() const override { return n_; }
  void save(std::ostream&) const override {}

 private:
  std::string leak_;
  std::size_t n_ = 0;
};

TEST(Chronological, FutureNameInRankingAborts) {
  auto c = atoms_corpus({"A", "B", "C"}, {{"B", {"A"}}, {"C", {"B"}}});
  prover::FixtureProver fx;
  EvalConfig cfg;
  cfg.provers = {&fx};
  cfg.factory = [] { return std::make_unique<LeakyLearner>("C"); };
  EXPECT_THROW(run_chronological_eval(c, {{}, {}, {}}, cfg), corpus::ChronologyError);
}

// Counts updates and checks the predict-then-train order from outside.
class CountingLearner : public learners::NbModel {
 public:
  explicit CountingLearner(std::vector<std::size_t>* seen) : seen_(seen) {}
  learners::Ranking rank(const features::FeatureSet& q,
                         const std::vector<std::string>& c) const override {
    seen_->push_back(examples());
    return NbModel::rank(q, c);
  }

 private:
  std::vector<std::size_t>* seen_;
};

TEST(Chronological, PredictionSeesExactlyEarlierTheorems) {
  auto c = atoms_corpus({"A", "B", "C", "D"}, {{"B", {"A"}}, {"C", {"B"}}, {"D", {"A"}}});
  prover::FixtureProver fx;
  std::vector<std::size_t> seen;
  EvalConfig cfg;
  cfg.provers = {&fx};
  cfg.factory = [&] { return std::make_unique<CountingLearner>(&seen); };
  run_chronological_eval(c, {{"a"}, {"b"}, {"c"}, {"d"}}, cfg);
  EXPECT_EQ(seen, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Reprove, UsesExactlyTheHolDeps) {
  auto c = atoms_corpus({"A", "B", "T", "U"}, {{"T", {"A"}}, {"U", {"A"}}});
  NeedsProver prover(Needs{{"T", "A"}, {"U", "B"}});
  auto r = reprove(c, {&prover}, 1);
  EXPECT_EQ(r.proofs.size(), 1u);
  EXPECT_EQ(r.proofs.at("T").at("needs"), (std::vector<std::string>{"A"}));
  EXPECT_EQ(r.matrix.methods(), (std::vector<std::string>{"needs"}));
  EXPECT_EQ(r.runs.size(), 2u);
}

// Round 1 proves Ct from Bp. Only then does Ct's example carry Bp as a
// label, which lifts Bp to the top of Dt's ranking in round 2.
struct LoopFixture {
  corpus::Corpus c = atoms_corpus({"Aa", "Bp", "Ct", "Dt"}, {{"Ct", {"Aa"}}, {"Dt", {"Aa"}}});
  std::vector<features::FeatureSet> feats{{"c"}, {"a"}, {"a", "x"}, {"x", "y"}};
  NeedsProver prover{Needs{{"Ct", "Bp"}, {"Dt", "Bp"}}};
  EvalConfig cfg;
  LoopFixture() {
    cfg.provers = {&prover};
    cfg.learner = {"knn", 2};
    cfg.slices = {1};
  }
};

TEST(ImprovementLoop, ProofsGrowAcrossTwoRounds) {
  LoopFixture f;
  auto r = improvement_loop(f.c, f.feats, {}, f.cfg, 5);
  ASSERT_EQ(r.trace.size(), 4u);
  EXPECT_EQ(r.trace[0].proved, 0u);
  EXPECT_EQ(r.trace[1].proved, 1u);
  EXPECT_EQ(r.trace[2].proved, 2u);
  EXPECT_EQ(r.trace[3].added, 0u);
  EXPECT_EQ(r.proofs.at("Dt").at("needs"), (std::vector<std::string>{"Bp"}));
}

TEST(ImprovementLoop, ZeroRoundsAndEarlyStop) {
  LoopFixture f;
  AtpProofs initial{{"Ct", {{"needs", {"Bp"}}}}};
  auto none = improvement_loop(f.c, f.feats, initial, f.cfg, 0);
  EXPECT_EQ(none.proofs, initial);
  EXPECT_EQ(none.trace.size(), 1u);
  NeedsProver nothing{Needs{}};
  f.cfg.provers = {&nothing};
  auto stuck = improvement_loop(f.c, f.feats, initial, f.cfg, 3);
  EXPECT_EQ(stuck.trace.size(), 2u);
  EXPECT_EQ(stuck.trace[1].added, 0u);
}

TEST(Proofs, MergeKeepsSmaller) {
  AtpProofs a{{"T", {{"e", {"A", "B"}}}}};
  merge_proofs(a, {{"T", {{"e", {"C"}}, {"z3", {"A"}}}}});
  EXPECT_EQ(a.at("T").at("e"), (std::vector<std::string>{"C"}));
  EXPECT_EQ(proved_count(a), 1u);
}

TEST(Proofs, FileRoundTrip) {
  AtpProofs p{{"T", {{"e", {"A", "B"}}, {"z3", {}}}}, {"U", {{"v", {"C"}}}}};
  std::stringstream buf;
  write_proofs(p, buf);
  EXPECT_EQ(buf.str(), "T e: A B\nT z3:\nU v: C\n");
  EXPECT_EQ(read_proofs(buf), p);
  std::istringstream bad("no colon here\n");
  EXPECT_THROW(read_proofs(bad), std::runtime_error);
}

}  // namespace
}  // namespace hammerkit::eval
