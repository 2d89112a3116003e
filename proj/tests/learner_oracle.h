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

// Dense reference evaluations of the ranking formulas, written against plain
// arrays so they share no code with the sparse learners.

#ifndef HAMMERKIT_TESTS_LEARNER_ORACLE_H_
#define HAMMERKIT_TESTS_LEARNER_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hammerkit/training.h"

namespace hammerkit::testing {

struct RandomStream {
  std::vector<std::string> labels;
  std::vector<std::string> features;
  std::vector<learners::TrainingExample> examples;
  std::vector<std::vector<int>> queries;  // feature indices, ascending
};

inline std::string label_name(int i) { return "L" + std::to_string(100 + i); }
inline std::string feature_name(int i) { return "f" + std::to_string(100 + i); }

// Weights are multiples of 1/4 so that sums stay exact in binary.
inline RandomStream random_stream(std::mt19937& rng, int max_labels = 20, int max_features = 30,
                                  int max_examples = 40) {
  RandomStream r;
  const int nl = std::uniform_int_distribution<int>(1, max_labels)(rng);
  const int nf = std::uniform_int_distribution<int>(1, max_features)(rng);
  const int ne = std::uniform_int_distribution<int>(1, max_examples)(rng);
  for (int i = 0; i < nl; ++i) r.labels.push_back(label_name(i));
  for (int i = 0; i < nf; ++i) r.features.push_back(feature_name(i));
  std::bernoulli_distribution coin(0.3);
  std::uniform_int_distribution<int> quarter(1, 4);
  for (int e = 0; e < ne; ++e) {
    learners::TrainingExample ex;
    const int self = std::uniform_int_distribution<int>(0, nl - 1)(rng);
    ex.theorem = r.labels[self];
    ex.labels.push_back({ex.theorem, 1.0});
    for (int l = 0; l < nl; ++l) {
      if (l != self && coin(rng)) ex.labels.push_back({r.labels[l], quarter(rng) / 4.0});
    }
    for (int f = 0; f < nf; ++f) {
      if (coin(rng)) ex.input.push_back(r.features[f]);
    }
    r.examples.push_back(std::move(ex));
  }
  for (int q = 0; q < 5; ++q) {
    std::vector<int> query;
    for (int f = 0; f < nf; ++f) {
      if (coin(rng)) query.push_back(f);
    }
    r.queries.push_back(query);
  }
  return r;
}

inline features::FeatureSet query_set(const RandomStream& r, const std::vector<int>& q) {
  features::FeatureSet out;
  for (int f : q) out.push_back(r.features[f]);
  return out;
}

inline int index_of(const std::vector<std::string>& v, const std::string& s) {
  return static_cast<int>(std::find(v.begin(), v.end(), s) - v.begin());
}

inline std::vector<std::string> order_by_score(const std::vector<std::string>& names,
                                               const std::vector<double>& score) {
  std::vector<int> idx(names.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return names[a] < names[b];
  });
  std::vector<std::string> out;
  for (int i : idx) out.push_back(names[i]);
  return out;
}

struct DenseNb {
  std::vector<double> t;
  std::vector<std::vector<double>> s;  // [label][feature]
};

inline DenseNb dense_nb(const RandomStream& r, int repeat = 1) {
  DenseNb m{std::vector<double>(r.labels.size(), 0.0),
            std::vector<std::vector<double>>(r.labels.size(),
                                             std::vector<double>(r.features.size(), 0.0))};
  for (int rep = 0; rep < repeat; ++rep) {
    for (const auto& ex : r.examples) {
      for (const auto& l : ex.labels) {
        const int li = index_of(r.labels, l.name);
        m.t[li] += l.weight;
        for (const auto& f : ex.input) m.s[li][index_of(r.features, f)] += l.weight;
      }
    }
  }
  return m;
}

inline std::vector<std::string> nb_oracle(const RandomStream& r, const DenseNb& m,
                                          const std::vector<int>& query, double s1 = 0.05,
                                          double s2 = 1.0, double s3 = 0.02) {
  std::vector<double> score(r.labels.size());
  for (std::size_t l = 0; l < r.labels.size(); ++l) {
    if (m.t[l] <= 0) {
      score[l] = -std::numeric_limits<double>::infinity();
      continue;
    }
    double acc = std::log(m.t[l]);
    int absent = 0;
    for (int f : query) {
      if (m.s[l][f] > 0) {
        acc += std::log((m.s[l][f] + s1) / (m.t[l] * s2));
      } else {
        ++absent;
      }
    }
    score[l] = acc + absent * std::log(s3);
  }
  return order_by_score(r.labels, score);
}

inline std::vector<std::string> knn_oracle(const RandomStream& r, const std::vector<int>& query,
                                           std::size_t k) {
  const std::size_t n = r.examples.size();
  std::vector<std::vector<bool>> has(n, std::vector<bool>(r.features.size(), false));
  for (std::size_t e = 0; e < n; ++e) {
    for (const auto& f : r.examples[e].input) has[e][index_of(r.features, f)] = true;
  }
  std::vector<double> idf(r.features.size());
  for (std::size_t f = 0; f < r.features.size(); ++f) {
    int df = 0;
    for (std::size_t e = 0; e < n; ++e) df += has[e][f] ? 1 : 0;
    idf[f] = std::log(static_cast<double>(n) / (1.0 + df));
  }
  std::vector<double> sim(n, 0.0);
  for (std::size_t e = 0; e < n; ++e) {
    for (int f : query) {
      if (has[e][f]) sim[e] += idf[f] * idf[f];
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sim[a] > sim[b]; });
  std::vector<double> score(r.labels.size(), 0.0);
  for (std::size_t i = 0; i < std::min(k, n); ++i) {
    const auto& ex = r.examples[order[i]];
    for (const auto& l : ex.labels) score[index_of(r.labels, l.name)] += sim[order[i]] * l.weight;
  }
  return order_by_score(r.labels, score);
}

}  // namespace hammerkit::testing

#endif  // HAMMERKIT_TESTS_LEARNER_ORACLE_H_
