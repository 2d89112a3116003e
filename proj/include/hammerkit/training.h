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

// Training examples for premise-selection learners, and the policies that
// decide which dependencies of a theorem become its labels.

#ifndef HAMMERKIT_TRAINING_H_
#define HAMMERKIT_TRAINING_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hammerkit/features.h"

namespace hammerkit::corpus {
class Corpus;
}

namespace hammerkit::learners {

struct Label {
  std::string name;
  double weight = 1.0;

  bool operator==(const Label&) const = default;
};

struct TrainingExample {
  std::string theorem;
  std::size_t index = 0;
  features::FeatureSet input;
  // The theorem itself comes first with weight 1.
  std::vector<Label> labels;
};

enum class PolicyKind { kMinweight, kNominweight, kSymsonly, kAtponly };
enum class ProverPref { kMinimal, kVampire, kE, kZ3 };

inline constexpr double kMinweightFloor = 0.001;
inline constexpr double kMinweightFloorSmall = 0.000001;

// theorem -> prover id -> premises used by that prover's (minimized) proof.
using AtpProofs = std::map<std::string, std::map<std::string, std::vector<std::string>>>;

struct DepPolicy {
  PolicyKind kind = PolicyKind::kAtponly;
  double floor = kMinweightFloor;
  ProverPref pref = ProverPref::kMinimal;
  std::map<std::string, double> likelihood;
};

// Accepts minweight, minweight6 (floor 1e-6), nominweight, symsonly, atponly,
// each optionally suffixed with _vpref, _epref or _zpref.
DepPolicy parse_policy(const std::string& name);
std::string policy_name(const DepPolicy& policy);

// Picks the proof a policy learns from; nullptr when there is none.
const std::vector<std::string>* preferred_proof(
    const std::map<std::string, std::vector<std::string>>& by_prover, ProverPref pref);

// likelihood(d) = (ATP proofs using d) / (ATP-proved theorems whose HOL
// proof used d), over theorems having both kinds of proof.
std::map<std::string, double> usage_likelihood(const corpus::Corpus& corpus,
                                               const AtpProofs& proofs,
                                               ProverPref pref = ProverPref::kMinimal);

TrainingExample make_example(const corpus::Corpus& corpus, std::size_t index,
                             features::FeatureSet input, const AtpProofs& proofs,
                             const DepPolicy& policy);

// One example per corpus entry, in chronological order. `features` is
// indexed like the corpus. Throws corpus::ChronologyError.
std::vector<TrainingExample> build_examples(const corpus::Corpus& corpus,
                                            const std::vector<features::FeatureSet>& features,
                                            const AtpProofs& proofs, const DepPolicy& policy);

}  // namespace hammerkit::learners

#endif  // HAMMERKIT_TRAINING_H_
