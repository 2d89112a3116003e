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

#ifndef HAMMERKIT_NAIVE_BAYES_H_
#define HAMMERKIT_NAIVE_BAYES_H_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "hammerkit/learner.h"

namespace hammerkit::learners {

struct NbParams {
  double sigma1 = 0.05;
  double sigma2 = 1.0;
  double sigma3 = 0.02;
};

// Sparse multiclass naive Bayes over weighted labels.
//
//   score(L) = ln t(L)
//            + sum over query features f with s(L,f) > 0 of ln((s(L,f) + sigma1) / (t(L) * sigma2))
//            + (number of query features with s(L,f) = 0) * ln sigma3
//
// Labels never seen score -inf. Ties are broken by name.
class NbModel : public Learner {
 public:
  explicit NbModel(NbParams params = {}) : params_(params) {}

  std::string kind() const override { return "nb"; }
  void update(const TrainingExample& example) override;
  Ranking rank(const features::FeatureSet& query,
               const std::vector<std::string>& candidates) const override;
  std::size_t examples() const override { return examples_; }
  void save(std::ostream& out) const override;
  static NbModel load_body(std::istream& in);

  double score(const std::string& label, const features::FeatureSet& query) const;
  double t(const std::string& label) const;
  double s(const std::string& label, const std::string& feature) const;
  double total() const { return total_; }
  const NbParams& params() const { return params_; }
  std::size_t vocabulary_size() const { return vocabulary_.size(); }

 private:
  struct LabelStats {
    double t = 0;
    std::unordered_map<std::string, double> s;
  };

  NbParams params_;
  std::unordered_map<std::string, LabelStats> labels_;
  std::unordered_map<std::string, std::size_t> vocabulary_;
  double total_ = 0;
  std::size_t examples_ = 0;
};

}  // namespace hammerkit::learners

#endif  // HAMMERKIT_NAIVE_BAYES_H_
