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

#include "hammerkit/training.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hammerkit/corpus.h"

namespace hammerkit::learners {

namespace {

const char* pref_prover(ProverPref pref) {
  switch (pref) {
    case ProverPref::kVampire:
      return "vampire";
    case ProverPref::kE:
      return "e";
    case ProverPref::kZ3:
      return "z3";
    case ProverPref::kMinimal:
      break;
  }
  return nullptr;
}

void check_earlier(const corpus::Corpus& corpus, std::size_t index, const std::string& dep) {
  const corpus::TheoremEntry& d = corpus.get(dep);
  if (d.index >= index) {
    throw corpus::ChronologyError("label " + dep + " of " + corpus.at(index).name +
                                  " is not earlier");
  }
}

}  // namespace

DepPolicy parse_policy(const std::string& name) {
  DepPolicy p;
  std::string base = name;
  for (auto [suffix, pref] : {std::pair{"_vpref", ProverPref::kVampire},
                              std::pair{"_epref", ProverPref::kE},
                              std::pair{"_zpref", ProverPref::kZ3}}) {
    const std::string s = suffix;
    if (base.size() > s.size() && base.compare(base.size() - s.size(), s.size(), s) == 0) {
      base.resize(base.size() - s.size());
      p.pref = pref;
      break;
    }
  }
  if (base == "minweight") {
    p.kind = PolicyKind::kMinweight;
  } else if (base == "minweight6") {
    p.kind = PolicyKind::kMinweight;
    p.floor = kMinweightFloorSmall;
  } else if (base == "nominweight") {
    p.kind = PolicyKind::kNominweight;
  } else if (base == "symsonly") {
    p.kind = PolicyKind::kSymsonly;
  } else if (base == "atponly") {
    p.kind = PolicyKind::kAtponly;
  } else {
    throw std::invalid_argument("unknown dependency policy: " + name);
  }
  return p;
}

std::string policy_name(const DepPolicy& policy) {
  std::string out;
  switch (policy.kind) {
    case PolicyKind::kMinweight:
      out = policy.floor == kMinweightFloorSmall ? "minweight6" : "minweight";
      break;
    case PolicyKind::kNominweight:
      out = "nominweight";
      break;
    case PolicyKind::kSymsonly:
      out = "symsonly";
      break;
    case PolicyKind::kAtponly:
      out = "atponly";
      break;
  }
  switch (policy.pref) {
    case ProverPref::kVampire:
      return out + "_vpref";
    case ProverPref::kE:
      return out + "_epref";
    case ProverPref::kZ3:
      return out + "_zpref";
    case ProverPref::kMinimal:
      break;
  }
  return out;
}

const std::vector<std::string>* preferred_proof(
    const std::map<std::string, std::vector<std::string>>& by_prover, ProverPref pref) {
  if (const char* id = pref_prover(pref)) {
    if (auto it = by_prover.find(id); it != by_prover.end()) return &it->second;
  }
  const std::vector<std::string>* best = nullptr;
  for (const auto& [prover, premises] : by_prover) {
    if (!best || premises.size() < best->size()) best = &premises;
  }
  return best;
}

std::map<std::string, double> usage_likelihood(const corpus::Corpus& corpus,
                                               const AtpProofs& proofs, ProverPref pref) {
  std::map<std::string, double> used, seen;
  for (const auto& [theorem, by_prover] : proofs) {
    const std::vector<std::string>* hol = corpus.deps(theorem);
    const std::vector<std::string>* atp = preferred_proof(by_prover, pref);
    if (!hol || !atp) continue;
    std::set<std::string> atp_set(atp->begin(), atp->end());
    for (const auto& d : *hol) {
      seen[d] += 1;
      if (atp_set.count(d)) used[d] += 1;
    }
  }
  std::map<std::string, double> out;
  for (const auto& [d, n] : seen) out[d] = used[d] / n;
  return out;
}

TrainingExample make_example(const corpus::Corpus& corpus, std::size_t index,
                             features::FeatureSet input, const AtpProofs& proofs,
                             const DepPolicy& policy) {
  const corpus::TheoremEntry& entry = corpus.at(index);
  TrainingExample ex{entry.name, index, std::move(input), {{entry.name, 1.0}}};
  std::set<std::string> present{entry.name};
  auto add = [&](const std::string& name, double weight) {
    check_earlier(corpus, index, name);
    if (present.insert(name).second) ex.labels.push_back({name, weight});
  };

  if (policy.kind == PolicyKind::kSymsonly) return ex;

  const std::vector<std::string>* atp = nullptr;
  if (auto it = proofs.find(entry.name); it != proofs.end()) {
    atp = preferred_proof(it->second, policy.pref);
  }
  if (atp) {
    for (const auto& d : *atp) add(d, 1.0);
    return ex;
  }
  if (policy.kind == PolicyKind::kAtponly) return ex;

  const std::vector<std::string>* hol = corpus.deps(entry.name);
  if (!hol) return ex;
  for (const auto& d : *hol) {
    auto it = policy.likelihood.find(d);
    const double l = it == policy.likelihood.end() ? 1.0 : it->second;
    if (l > 0) {
      add(d, l);
    } else if (policy.kind == PolicyKind::kMinweight) {
      add(d, policy.floor);
    }
  }
  return ex;
}

std::vector<TrainingExample> build_examples(const corpus::Corpus& corpus,
                                            const std::vector<features::FeatureSet>& features,
                                            const AtpProofs& proofs, const DepPolicy& policy) {
  if (features.size() != corpus.size()) {
    throw std::invalid_argument("feature table does not match corpus size");
  }
  std::vector<TrainingExample> out;
  out.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out.push_back(make_example(corpus, i, features[i], proofs, policy));
  }
  return out;
}

}  // namespace hammerkit::learners
