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

#include "hammerkit/naive_bayes.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace hammerkit::learners {

void NbModel::update(const TrainingExample& example) {
  for (const auto& f : example.input) ++vocabulary_[f];
  for (const auto& label : example.labels) {
    LabelStats& st = labels_[label.name];
    st.t += label.weight;
    for (const auto& f : example.input) st.s[f] += label.weight;
  }
  total_ += 1;
  ++examples_;
}

double NbModel::t(const std::string& label) const {
  auto it = labels_.find(label);
  return it == labels_.end() ? 0 : it->second.t;
}

double NbModel::s(const std::string& label, const std::string& feature) const {
  auto it = labels_.find(label);
  if (it == labels_.end()) return 0;
  auto jt = it->second.s.find(feature);
  return jt == it->second.s.end() ? 0 : jt->second;
}

double NbModel::score(const std::string& label, const features::FeatureSet& query) const {
  auto it = labels_.find(label);
  if (it == labels_.end() || it->second.t <= 0) return -std::numeric_limits<double>::infinity();
  const LabelStats& st = it->second;
  double sum = std::log(st.t);
  std::size_t misses = 0;
  for (const auto& f : query) {
    auto jt = st.s.find(f);
    if (jt != st.s.end() && jt->second > 0) {
      sum += std::log((jt->second + params_.sigma1) / (st.t * params_.sigma2));
    } else {
      ++misses;
    }
  }
  return sum + static_cast<double>(misses) * std::log(params_.sigma3);
}

Ranking NbModel::rank(const features::FeatureSet& query,
                      const std::vector<std::string>& candidates) const {
  if (examples_ == 0) return candidates;
  std::vector<std::pair<double, const std::string*>> scored;
  scored.reserve(candidates.size());
  for (const auto& c : candidates) scored.emplace_back(score(c, query), &c);
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return *a.second < *b.second;
  });
  Ranking out;
  out.reserve(scored.size());
  for (const auto& [sc, name] : scored) out.push_back(*name);
  return out;
}

}  // namespace hammerkit::learners
