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

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hammerkit/knn.h"
#include "hammerkit/learner.h"
#include "hammerkit/naive_bayes.h"

namespace hammerkit::learners {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "hammerkit-model";
constexpr int kVersion = 1;

json header(const std::string& kind) {
  return json{{"format", kFormat}, {"version", kVersion}, {"kind", kind}};
}

json labels_json(const std::vector<Label>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(json::array({l.name, l.weight}));
  return out;
}

}  // namespace

void NbModel::save(std::ostream& out) const {
  json j = header(kind());
  j["params"] = {{"sigma1", params_.sigma1}, {"sigma2", params_.sigma2},
                 {"sigma3", params_.sigma3}};
  j["examples"] = examples_;
  j["total"] = total_;
  j["vocabulary"] = std::map<std::string, std::size_t>(vocabulary_.begin(), vocabulary_.end());
  json labels = json::object();
  for (const auto& [name, st] : labels_) {
    labels[name] = {{"t", st.t}, {"s", std::map<std::string, double>(st.s.begin(), st.s.end())}};
  }
  j["labels"] = std::move(labels);
  out << j.dump() << '\n';
}

NbModel NbModel::load_body(std::istream& in) {
  json j = json::parse(in);
  NbModel m({j.at("params").at("sigma1").get<double>(), j.at("params").at("sigma2").get<double>(),
             j.at("params").at("sigma3").get<double>()});
  m.examples_ = j.at("examples").get<std::size_t>();
  m.total_ = j.at("total").get<double>();
  for (const auto& [f, n] : j.at("vocabulary").items()) m.vocabulary_[f] = n.get<std::size_t>();
  for (const auto& [name, st] : j.at("labels").items()) {
    LabelStats& dst = m.labels_[name];
    dst.t = st.at("t").get<double>();
    for (const auto& [f, v] : st.at("s").items()) dst.s[f] = v.get<double>();
  }
  return m;
}

void KnnStore::save(std::ostream& out) const {
  json j = header(kind());
  j["k"] = k_;
  json examples = json::array();
  for (const auto& e : stored_) {
    examples.push_back({{"theorem", e.theorem}, {"features", e.features},
                        {"labels", labels_json(e.labels)}});
  }
  j["stored"] = std::move(examples);
  out << j.dump() << '\n';
}

KnnStore KnnStore::load_body(std::istream& in) {
  json j = json::parse(in);
  KnnStore s(j.at("k").get<std::size_t>());
  for (const auto& e : j.at("stored")) {
    TrainingExample ex;
    ex.theorem = e.at("theorem").get<std::string>();
    ex.input = e.at("features").get<features::FeatureSet>();
    for (const auto& l : e.at("labels")) {
      ex.labels.push_back({l.at(0).get<std::string>(), l.at(1).get<double>()});
    }
    s.update(ex);
  }
  return s;
}

std::unique_ptr<Learner> make_learner(const LearnerConfig& config) {
  if (config.kind == "nb") return std::make_unique<NbModel>();
  if (config.kind == "knn") return std::make_unique<KnnStore>(config.k);
  throw std::invalid_argument("unknown learner: " + config.kind);
}

std::string learner_label(const LearnerConfig& config) {
  return config.kind == "knn" ? "knn" + std::to_string(config.k) : config.kind;
}

LearnerConfig parse_learner(const std::string& label) {
  if (label == "nb") return {"nb", 0};
  if (label.rfind("knn", 0) == 0) {
    const std::string digits = label.substr(3);
    if (digits.empty()) return {"knn", 40};
    if (digits.find_first_not_of("0123456789") == std::string::npos) {
      return {"knn", std::stoul(digits)};
    }
  }
  throw std::invalid_argument("unknown learner: " + label);
}

std::unique_ptr<Learner> load_learner(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("model snapshot: ") + e.what());
  }
  if (j.value("format", "") != kFormat) throw std::runtime_error("not a hammerkit model");
  if (j.value("version", 0) != kVersion) {
    throw std::runtime_error("unsupported model version " + std::to_string(j.value("version", 0)));
  }
  std::istringstream body(text);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "nb") return std::make_unique<NbModel>(NbModel::load_body(body));
  if (kind == "knn") return std::make_unique<KnnStore>(KnnStore::load_body(body));
  throw std::runtime_error("unknown model kind " + kind);
}

void save_learner_file(const Learner& learner, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  learner.save(out);
}

std::unique_ptr<Learner> load_learner_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return load_learner(in);
}

}  // namespace hammerkit::learners
