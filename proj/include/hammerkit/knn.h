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

#ifndef HAMMERKIT_KNN_H_
#define HAMMERKIT_KNN_H_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "hammerkit/learner.h"

namespace hammerkit::learners {

inline constexpr std::size_t kKnnProfiles[] = {10, 40, 160};

// Append-only k-nearest-neighbour store.
//
// idf(f) = ln(N / (1 + df(f))), similarity(q, e) = sum of idf(f)^2 over
// shared features. The k most similar examples (earlier example first on
// ties) vote for their labels with similarity * weight; every example's own
// theorem is credited with weight 1.
class KnnStore : public Learner {
 public:
  explicit KnnStore(std::size_t k = 40) : k_(k == 0 ? 1 : k) {}

  std::string kind() const override { return "knn"; }
  void update(const TrainingExample& example) override;
  Ranking rank(const features::FeatureSet& query,
               const std::vector<std::string>& candidates) const override;
  std::size_t examples() const override { return stored_.size(); }
  void save(std::ostream& out) const override;
  static KnnStore load_body(std::istream& in);

  std::size_t k() const { return k_; }
  double idf(const std::string& feature) const;
  double similarity(const features::FeatureSet& query, std::size_t example) const;
  std::size_t df(const std::string& feature) const;

  struct Stored {
    std::string theorem;
    features::FeatureSet features;
    std::vector<Label> labels;
  };
  const std::vector<Stored>& stored() const { return stored_; }

 private:
  std::size_t k_;
  std::vector<Stored> stored_;
  std::unordered_map<std::string, std::size_t> df_;
};

}  // namespace hammerkit::learners

#endif  // HAMMERKIT_KNN_H_
