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

#include "hammerkit/knn.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace hammerkit::learners {

void KnnStore::update(const TrainingExample& example) {
  Stored st{example.theorem, example.input, example.labels};
  const bool has_self = std::any_of(st.labels.begin(), st.labels.end(),
                                    [&](const Label& l) { return l.name == st.theorem; });
  if (!has_self) st.labels.insert(st.labels.begin(), Label{st.theorem, 1.0});
  for (const auto& f : st.features) ++df_[f];
  stored_.push_back(std::move(st));
}

std::size_t KnnStore::df(const std::string& feature) const {
  auto it = df_.find(feature);
  return it == df_.end() ? 0 : it->second;
}

double KnnStore::idf(const std::string& feature) const {
  return std::log(static_cast<double>(stored_.size()) / static_cast<double>(1 + df(feature)));
}

double KnnStore::similarity(const features::FeatureSet& query, std::size_t example) const {
  const features::FeatureSet& ef = stored_.at(example).features;
  double sum = 0;
  auto a = query.begin();
  auto b = ef.begin();
  while (a != query.end() && b != ef.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      const double w = idf(*a);
      sum += w * w;
      ++a;
      ++b;
    }
  }
  return sum;
}

Ranking KnnStore::rank(const features::FeatureSet& query,
                       const std::vector<std::string>& candidates) const {
  if (stored_.empty()) return candidates;
  std::vector<double> sim(stored_.size());
  for (std::size_t i = 0; i < stored_.size(); ++i) sim[i] = similarity(query, i);
  std::vector<std::size_t> order(stored_.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t k = std::min(k_, order.size());
  std::partial_sort(order.begin(), order.begin() + k, order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (sim[a] != sim[b]) return sim[a] > sim[b];
                      return a < b;
                    });
  std::unordered_map<std::string, double> votes;
  for (std::size_t n = 0; n < k; ++n) {
    const Stored& e = stored_[order[n]];
    for (const auto& l : e.labels) votes[l.name] += sim[order[n]] * l.weight;
  }
  std::vector<std::pair<double, const std::string*>> scored;
  scored.reserve(candidates.size());
  for (const auto& c : candidates) {
    auto it = votes.find(c);
    scored.emplace_back(it == votes.end() ? 0.0 : it->second, &c);
  }
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
