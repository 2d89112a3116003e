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

#ifndef HAMMERKIT_LEARNER_H_
#define HAMMERKIT_LEARNER_H_

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "hammerkit/features.h"
#include "hammerkit/training.h"

namespace hammerkit::learners {

using Ranking = std::vector<std::string>;

// Incremental premise ranker. Updates are serialized by the caller; rank()
// on an unchanging learner is safe to call from several threads.
class Learner {
 public:
  virtual ~Learner() = default;
  virtual std::string kind() const = 0;
  virtual void update(const TrainingExample& example) = 0;
  // Orders `candidates`. With no training data the input order is kept.
  virtual Ranking rank(const features::FeatureSet& query,
                       const std::vector<std::string>& candidates) const = 0;
  virtual std::size_t examples() const = 0;
  virtual void save(std::ostream& out) const = 0;
};

struct LearnerConfig {
  std::string kind = "nb";  // "nb" or "knn"
  std::size_t k = 40;
};

std::unique_ptr<Learner> make_learner(const LearnerConfig& config);
std::string learner_label(const LearnerConfig& config);  // "nb", "knn40"
LearnerConfig parse_learner(const std::string& label);

std::unique_ptr<Learner> load_learner(std::istream& in);
void save_learner_file(const Learner& learner, const std::string& path);
std::unique_ptr<Learner> load_learner_file(const std::string& path);

}  // namespace hammerkit::learners

#endif  // HAMMERKIT_LEARNER_H_
