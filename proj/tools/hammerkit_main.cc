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
// Command-line front end. Every subcommand reads and writes plain files so
// that stages can be chained from the shell.

#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hammerkit/advisor_service.h"
#include "hammerkit/corpus.h"
#include "hammerkit/eval.h"
#include "hammerkit/features.h"
#include "hammerkit/fixture_prover.h"
#include "hammerkit/learner.h"
#include "hammerkit/metrics.h"
#include "hammerkit/pipeline.h"
#include "hammerkit/prover.h"
#include "hammerkit/training.h"

namespace hk = hammerkit;

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

// Writes to `path`, or stdout when it is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// The provers named on the command line. "fixture" and "shallow" are the
// built-in syntactic provers; anything else is a config file of external
// provers ("id | format | command" lines).
class ProverSet {
 public:
  ProverSet(const std::vector<std::string>& names, const std::string& workdir) {
    for (const auto& name : names) {
      if (name == "fixture") {
        owned_.push_back(std::make_unique<hk::prover::FixtureProver>("fixture", 8));
      } else if (name == "shallow") {
        owned_.push_back(std::make_unique<hk::prover::FixtureProver>("shallow", 2));
      } else {
        auto in = open_in(name);
        for (auto& spec : hk::prover::read_prover_config(in)) {
          owned_.push_back(std::make_unique<hk::prover::ExternalProver>(spec, workdir));
        }
      }
    }
    for (const auto& p : owned_) view_.push_back(p.get());
  }
  const std::vector<const hk::prover::Prover*>& get() const { return view_; }

 private:
  std::vector<std::unique_ptr<hk::prover::Prover>> owned_;
  std::vector<const hk::prover::Prover*> view_;
};

hk::learners::AtpProofs load_proofs(const std::string& path) {
  if (path.empty()) return {};
  auto in = open_in(path);
  return hk::eval::read_proofs(in);
}

std::vector<hk::prover::CsvRecord> load_runs(const std::vector<std::string>& paths) {
  std::vector<hk::prover::CsvRecord> all;
  for (const auto& path : paths) {
    auto in = open_in(path);
    auto part = hk::prover::read_csv(in);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

void write_runs(const std::vector<hk::prover::CsvRecord>& runs, const std::string& path) {
  Output out(path);
  out.get() << hk::prover::csv_header() << '\n';
  for (const auto& r : runs) out.get() << hk::prover::csv_row(r.run, r.slice) << '\n';
}

std::map<std::string, std::size_t> dep_counts(const std::string& path) {
  auto in = open_in(path);
  std::map<std::string, std::size_t> out;
  for (const auto& rec : hk::corpus::read_dep_lines(in)) out[rec.name] = rec.deps.size();
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct CorpusOpt {
  std::string path;
  void add(CLI::App* app) {
    app->add_option("--corpus", path, "Ingested corpus file")->required();
  }
  hk::corpus::Corpus load() const { return hk::corpus::Corpus::load_file(path); }
};

std::unique_ptr<hk::learners::Learner> train_model(
    const hk::corpus::Corpus& corpus, const std::vector<hk::features::FeatureSet>& feats,
    const hk::learners::AtpProofs& proofs, hk::learners::DepPolicy policy,
    const hk::learners::LearnerConfig& learner) {
  const bool weighted = policy.kind == hk::learners::PolicyKind::kMinweight ||
                        policy.kind == hk::learners::PolicyKind::kNominweight;
  if (weighted && policy.likelihood.empty()) {
    policy.likelihood = hk::learners::usage_likelihood(corpus, proofs, policy.pref);
  }
  auto model = hk::learners::make_learner(learner);
  for (const auto& ex : hk::learners::build_examples(corpus, feats, proofs, policy)) {
    model->update(ex);
  }
  return model;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hammerkit: premise selection and ATP orchestration for HOL libraries"};
  app.require_subcommand(1);

  // ingest
  std::string statements, deps, trivial, signature, out_path;
  auto* ingest = app.add_subcommand("ingest", "Parse and normalize a library into a corpus file");
  ingest->add_option("--statements", statements, "name<TAB>term lines")->required();
  ingest->add_option("--deps", deps, "name: dep ... lines")->required();
  ingest->add_option("--trivial", trivial, "Trivial fact names, one per line");
  ingest->add_option("--signature", signature, "tycon/const declarations");
  ingest->add_option("--out", out_path, "Corpus file to write")->required();

  // features
  CorpusOpt feat_corpus;
  std::string mode = "symst";
  bool triv = false;
  std::string feat_out;
  auto* feats_cmd = app.add_subcommand("features", "Write the feature file");
  feat_corpus.add(feats_cmd);
  feats_cmd->add_option("--mode", mode, "syms0 | syms | symst | symsd");
  feats_cmd->add_flag("--triv", triv, "Keep trivial features");
  feats_cmd->add_option("--out", feat_out, "Output file (default stdout)");

  // problems
  CorpusOpt prob_corpus;
  std::string prob_format = "fof", prob_model, prob_dir = "problems";
  std::size_t prob_slice = 0;
  bool prob_tenth = false;
  auto* problems = app.add_subcommand("problems", "Write TPTP problems");
  prob_corpus.add(problems);
  problems->add_option("--format", prob_format, "fof | tff1 | thf");
  problems->add_option("--slice", prob_slice,
                       "Premises taken from the model ranking (0: recorded dependencies)");
  problems->add_option("--model", prob_model, "Model snapshot used for --slice");
  problems->add_option("--mode", mode, "Feature mode for ranking");
  problems->add_option("--out-dir", prob_dir, "Directory for <index>_<slice>.<fmt>.p files");
  problems->add_flag("--every-tenth", prob_tenth, "Only theorems with index % 10 == 0");

  // train
  CorpusOpt train_corpus;
  std::string policy = "atponly", learner = "nb", proofs_path, model_out;
  auto* train = app.add_subcommand("train", "Train a premise-selection model on the whole corpus");
  train_corpus.add(train);
  train->add_option("--policy", policy, "minweight | minweight6 | nominweight | symsonly | atponly");
  train->add_option("--learner", learner, "nb | knn | knnK");
  train->add_option("--proofs", proofs_path, "ATP proofs file");
  train->add_option("--mode", mode, "Feature mode");
  train->add_option("--out", model_out, "Model snapshot to write")->required();

  // predict
  CorpusOpt pred_corpus;
  std::string pred_model, pred_out;
  std::size_t pred_slice = 32;
  auto* predict = app.add_subcommand("predict", "Rank earlier premises for every theorem");
  pred_corpus.add(predict);
  predict->add_option("--model", pred_model, "Model snapshot")->required();
  predict->add_option("--slice", pred_slice, "Ranking length");
  predict->add_option("--mode", mode, "Feature mode");
  predict->add_option("--out", pred_out, "Output file (default stdout)");

  // reprove
  CorpusOpt rep_corpus;
  std::vector<std::string> prover_names = {"fixture"};
  double timelimit = 30;
  std::size_t workers = hk::prover::kDefaultWorkers;
  bool no_minimize = false, every_tenth = false;
  std::string csv_out, proofs_out, workdir = std::filesystem::temp_directory_path().string();
  auto* reprove = app.add_subcommand("reprove", "Run provers on the recorded dependencies");
  rep_corpus.add(reprove);
  auto add_run_opts = [&](CLI::App* cmd) {
    cmd->add_option("--provers", prover_names, "fixture, shallow or prover config files");
    cmd->add_option("--timelimit", timelimit, "Seconds per prover run");
    cmd->add_option("--workers", workers, "Parallel prover runs");
    cmd->add_flag("--no-minimize", no_minimize, "Skip pseudo-minimization");
    cmd->add_flag("--every-tenth", every_tenth, "Only theorems with index % 10 == 0");
    cmd->add_option("--csv", csv_out, "Run log CSV (default stdout)");
    cmd->add_option("--proofs-out", proofs_out, "Minimized proofs file");
    cmd->add_option("--workdir", workdir, "Scratch directory for problem files");
  };
  add_run_opts(reprove);

  // eval
  CorpusOpt eval_corpus;
  std::string slices_text = "8,32,128,512";
  auto* eval_cmd = app.add_subcommand("eval", "Chronological predict-then-train evaluation");
  eval_corpus.add(eval_cmd);
  add_run_opts(eval_cmd);
  eval_cmd->add_option("--learner", learner, "nb | knn | knnK");
  eval_cmd->add_option("--policy", policy, "Dependency policy");
  eval_cmd->add_option("--slices", slices_text, "Comma-separated slice sizes");
  eval_cmd->add_option("--mode", mode, "Feature mode");
  eval_cmd->add_option("--proofs", proofs_path, "Known ATP proofs (e.g. from reprove)");

  // loop
  CorpusOpt loop_corpus;
  std::size_t rounds = 2;
  auto* loop = app.add_subcommand("loop", "Learn-prove improvement loop");
  loop_corpus.add(loop);
  add_run_opts(loop);
  loop->add_option("--learner", learner, "nb | knn | knnK");
  loop->add_option("--policy", policy, "Dependency policy");
  loop->add_option("--slices", slices_text, "Comma-separated slice sizes");
  loop->add_option("--mode", mode, "Feature mode");
  loop->add_option("--proofs", proofs_path, "Initial ATP proofs")->required();
  loop->add_option("--rounds", rounds, "Maximum rounds");

  // metrics / greedy
  std::vector<std::string> csv_in;
  bool countersat = false, as_csv = false;
  std::string methods_text;
  auto* metrics = app.add_subcommand("metrics", "Portfolio table from run logs");
  metrics->add_option("csv", csv_in, "Run log CSV files")->required();
  metrics->add_flag("--countersat-as-solved", countersat, "Count CounterSatisfiable as solved");
  metrics->add_flag("--csv-out", as_csv, "Print CSV instead of the aligned table");
  auto* greedy = app.add_subcommand("greedy", "Greedy covering sequence from run logs");
  greedy->add_option("csv", csv_in, "Run log CSV files")->required();
  greedy->add_option("--methods", methods_text, "Comma-separated method subset");
  greedy->add_flag("--countersat-as-solved", countersat, "Count CounterSatisfiable as solved");

  // compare-deps
  std::string original_deps, advised_deps;
  auto* compare = app.add_subcommand("compare-deps", "Compare dependency counts");
  compare->add_option("--original", original_deps, "name: dep ... file")->required();
  compare->add_option("--advised", advised_deps, "name: dep ... file")->required();

  // serve
  CorpusOpt serve_corpus;
  int port = 8080;
  double budget = 30;
  std::string serve_model, host = "0.0.0.0";
  auto* serve = app.add_subcommand("serve", "Answer conjecture queries over TCP");
  serve_corpus.add(serve);
  serve->add_option("--model", serve_model, "Model snapshot")->required();
  serve->add_option("--port", port, "Listen port");
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--budget", budget, "Seconds per query");
  serve->add_option("--provers", prover_names, "fixture, shallow or prover config files");
  serve->add_option("--slices", slices_text, "Comma-separated slice sizes");
  serve->add_option("--mode", mode, "Feature mode");
  serve->add_option("--workdir", workdir, "Scratch directory for problem files");

  // query
  std::string query_line;
  auto* query = app.add_subcommand("query", "Send one conjecture to a running service");
  query->add_option("--host", host, "Service address");
  query->add_option("--port", port, "Service port");
  query->add_option("term", query_line, "Conjecture term")->required();

  // pipeline
  std::string data_dir, report_out;
  auto* pipeline = app.add_subcommand("pipeline", "Run the whole evaluation on a library directory");
  pipeline->add_option("--data", data_dir,
                       "Directory with signature.txt, statements.tsv, deps.txt, trivial.txt")
      ->required();
  pipeline->add_option("--learner", learner, "nb | knn | knnK");
  pipeline->add_option("--policy", policy, "Dependency policy");
  pipeline->add_option("--slices", slices_text, "Comma-separated slice sizes");
  pipeline->add_option("--rounds", rounds, "Improvement loop rounds");
  pipeline->add_option("--out", report_out, "Report file (default stdout)");

  // fixture-prove
  std::string fixture_file;
  int depth = hk::prover::FixtureProver::kDefaultDepth;
  auto* fixture = app.add_subcommand("fixture-prove",
                                     "Run the syntactic fixture prover on a TPTP file");
  fixture->add_option("file", fixture_file, "Problem file")->required();
  fixture->add_option("--depth", depth, "Forward chaining rounds");

  CLI11_PARSE(app, argc, argv);

  auto slices = [&] {
    std::vector<std::size_t> out;
    for (const auto& s : split_commas(slices_text)) out.push_back(std::stoul(s));
    return out;
  };

  try {
    if (*ingest) {
      auto corpus = hk::corpus::Corpus::ingest_files(statements, deps, trivial, signature);
      corpus.save_file(out_path);
      std::cerr << "ingested " << corpus.size() << " entries\n";
    } else if (*feats_cmd) {
      auto corpus = feat_corpus.load();
      Output out(feat_out);
      hk::features::write_feature_file(corpus, hk::features::parse_mode(mode), triv, out.get());
    } else if (*problems) {
      auto corpus = prob_corpus.load();
      const auto format = hk::tptp::parse_format(prob_format);
      std::unique_ptr<hk::learners::Learner> model;
      if (prob_slice > 0) {
        if (prob_model.empty()) throw std::runtime_error("--slice needs --model");
        model = hk::learners::load_learner_file(prob_model);
      }
      std::filesystem::create_directories(prob_dir);
      std::size_t written = 0;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!hk::eval::is_evaluated(corpus, i, prob_tenth)) continue;
        const auto& entry = corpus.at(i);
        std::vector<std::string> premises;
        if (model) {
          auto ranking = model->rank(
              hk::features::extract_features(entry.statement, hk::features::parse_mode(mode)),
              hk::eval::candidates_before(corpus, i));
          ranking.resize(std::min(ranking.size(), prob_slice));
          premises = ranking;
        } else {
          for (const auto& d : *corpus.deps(entry.name)) {
            if (!corpus.is_trivial(d)) premises.push_back(d);
          }
        }
        const std::string label = model ? std::to_string(prob_slice) : "deps";
        try {
          auto p = hk::eval::make_problem(corpus, entry.name, premises, entry.name, format);
          std::ofstream f(prob_dir + "/" + std::to_string(i) + "_" + label + "." + prob_format +
                          ".p");
          f << "% " << entry.name << "\n" << p.fo.serialize();
          ++written;
        } catch (const hk::tptp::NotFirstOrder& e) {
          std::cerr << entry.name << ": skipped: " << e.what() << "\n";
        }
      }
      std::cerr << "wrote " << written << " problems to " << prob_dir << "\n";
    } else if (*train) {
      auto corpus = train_corpus.load();
      auto feats = hk::pipeline::corpus_features(corpus, hk::features::parse_mode(mode));
      auto model = train_model(corpus, feats, load_proofs(proofs_path),
                               hk::learners::parse_policy(policy),
                               hk::learners::parse_learner(learner));
      hk::learners::save_learner_file(*model, model_out);
      std::cerr << "trained on " << model->examples() << " examples\n";
    } else if (*predict) {
      auto corpus = pred_corpus.load();
      auto model = hk::learners::load_learner_file(pred_model);
      Output out(pred_out);
      const auto m = hk::features::parse_mode(mode);
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!hk::eval::is_evaluated(corpus, i, false)) continue;
        const auto& entry = corpus.at(i);
        auto ranking = model->rank(hk::features::extract_features(entry.statement, m),
                                   hk::eval::candidates_before(corpus, i));
        ranking.resize(std::min(ranking.size(), pred_slice));
        out.get() << entry.name << ':';
        for (const auto& r : ranking) out.get() << ' ' << r;
        out.get() << '\n';
      }
    } else if (*reprove) {
      auto corpus = rep_corpus.load();
      ProverSet provers(prover_names, workdir);
      auto result = hk::eval::reprove(corpus, provers.get(), timelimit, !no_minimize, workers,
                                      every_tenth);
      write_runs(result.runs, csv_out);
      if (!proofs_out.empty()) {
        Output out(proofs_out);
        hk::eval::write_proofs(result.proofs, out.get());
      }
      std::cerr << "proved " << hk::eval::proved_count(result.proofs) << " theorems\n";
    } else if (*eval_cmd) {
      auto corpus = eval_corpus.load();
      ProverSet provers(prover_names, workdir);
      hk::eval::EvalConfig cfg;
      cfg.learner = hk::learners::parse_learner(learner);
      cfg.policy = hk::learners::parse_policy(policy);
      cfg.slices = slices();
      cfg.provers = provers.get();
      cfg.timelimit = timelimit;
      cfg.workers = workers;
      cfg.every_tenth = every_tenth;
      cfg.minimize = !no_minimize;
      auto feats = hk::pipeline::corpus_features(corpus, hk::features::parse_mode(mode));
      auto result = hk::eval::run_chronological_eval(corpus, feats, cfg, load_proofs(proofs_path));
      write_runs(result.runs, csv_out);
      if (!proofs_out.empty()) {
        Output out(proofs_out);
        hk::eval::write_proofs(result.proofs, out.get());
      }
      std::cerr << "predictions " << result.predictions << ", proved "
                << hk::eval::proved_count(result.proofs) << " theorems\n";
    } else if (*loop) {
      auto corpus = loop_corpus.load();
      ProverSet provers(prover_names, workdir);
      hk::eval::EvalConfig cfg;
      cfg.learner = hk::learners::parse_learner(learner);
      cfg.policy = hk::learners::parse_policy(policy);
      cfg.slices = slices();
      cfg.provers = provers.get();
      cfg.timelimit = timelimit;
      cfg.workers = workers;
      cfg.minimize = !no_minimize;
      auto feats = hk::pipeline::corpus_features(corpus, hk::features::parse_mode(mode));
      auto result =
          hk::eval::improvement_loop(corpus, feats, load_proofs(proofs_path), cfg, rounds);
      std::cout << "round proved added\n";
      for (const auto& step : result.trace) {
        std::cout << step.round << ' ' << step.proved << ' ' << step.added << '\n';
      }
      if (!proofs_out.empty()) {
        Output out(proofs_out);
        hk::eval::write_proofs(result.proofs, out.get());
      }
    } else if (*metrics) {
      auto matrix = hk::eval::matrix_from_csv(load_runs(csv_in));
      auto report = hk::eval::compute_metrics(matrix, {countersat});
      std::cout << (as_csv ? hk::eval::report_csv(report) : hk::eval::format_report(report));
    } else if (*greedy) {
      auto matrix = hk::eval::matrix_from_csv(load_runs(csv_in));
      auto steps = hk::eval::greedy_cover(matrix, split_commas(methods_text), {countersat});
      std::cout << hk::eval::format_greedy(steps, matrix.problems().size());
    } else if (*compare) {
      auto cmp = hk::eval::compare_dep_counts(dep_counts(original_deps), dep_counts(advised_deps));
      std::cout << hk::eval::format_comparison(cmp);
    } else if (*serve) {
      auto corpus = serve_corpus.load();
      auto model = hk::learners::load_learner_file(serve_model);
      ProverSet provers(prover_names, workdir);
      hk::service::ServiceConfig cfg;
      cfg.host = host;
      cfg.port = port;
      cfg.slices = slices();
      cfg.provers = provers.get();
      cfg.budget = budget;
      cfg.mode = hk::features::parse_mode(mode);

      sigset_t set;
      sigemptyset(&set);
      sigaddset(&set, SIGINT);
      sigaddset(&set, SIGTERM);
      pthread_sigmask(SIG_BLOCK, &set, nullptr);

      hk::service::AdvisorService service(corpus, *model, cfg);
      service.start();
      std::cerr << "listening on " << host << ":" << service.port() << "\n";
      int sig = 0;
      sigwait(&set, &sig);
      std::cerr << "shutting down\n";
      service.stop();
    } else if (*query) {
      std::cout << hk::service::query(host == "0.0.0.0" ? "127.0.0.1" : host, port, query_line)
                << "\n";
    } else if (*pipeline) {
      hk::pipeline::PipelineConfig cfg;
      cfg.data_dir = data_dir;
      cfg.learner = hk::learners::parse_learner(learner);
      cfg.policy = policy;
      cfg.slices = slices();
      cfg.rounds = rounds;
      Output out(report_out);
      out.get() << hk::pipeline::run_pipeline(cfg).report;
    } else if (*fixture) {
      auto in = open_in(fixture_file);
      std::stringstream text;
      text << in.rdbuf();
      auto parsed = hk::prover::parse_problem_text(text.str());
      auto result = hk::prover::chain_prove(parsed.axioms, parsed.conjecture, depth);
      std::cout << "% SZS status " << (result.proved ? "Theorem" : "GaveUp") << "\n";
      for (const auto& label : result.used_labels) {
        std::cout << "fof(" << label << ", axiom, $true, file('', " << label << ")).\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "hammerkit: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
