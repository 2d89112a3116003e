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

// Portfolio metrics over an evaluation matrix.
//
// A method solves a problem when its cell is Theorem (or CounterSatisfiable
// with countersat_as_solved). For each solved problem the method earns
// 1/(number of methods solving it); SOTAC is the mean of these shares and
// the sum is reported alongside. Unique counts problems no other method
// solved.

#ifndef HAMMERKIT_METRICS_H_
#define HAMMERKIT_METRICS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hammerkit/prover.h"

namespace hammerkit::eval {

class EvalMatrix {
 public:
  std::size_t add_problem(const std::string& problem);
  std::size_t add_method(const std::string& method);
  void set(const std::string& problem, const std::string& method, prover::Status status);
  std::optional<prover::Status> get(std::size_t problem, std::size_t method) const;

  const std::vector<std::string>& problems() const { return problems_; }
  const std::vector<std::string>& methods() const { return methods_; }

  // Problems and methods of `other` are added; its filled cells win.
  void merge(const EvalMatrix& other);

 private:
  std::vector<std::string> problems_;
  std::vector<std::string> methods_;
  std::map<std::string, std::size_t> problem_index_;
  std::map<std::string, std::size_t> method_index_;
  std::map<std::pair<std::size_t, std::size_t>, prover::Status> cells_;
};

// Methods are "<prover>" for CSV rows whose slice is empty or "-", and
// "<prover column>/<slice>" otherwise.
EvalMatrix matrix_from_csv(const std::vector<prover::CsvRecord>& records);

struct MetricsOptions {
  bool countersat_as_solved = false;
};

struct MethodMetrics {
  std::string method;
  std::size_t solved = 0;
  double solved_pct = 0;
  std::size_t unique = 0;
  double sotac = 0;
  double sum_sotac = 0;
  bool sotac_defined = false;  // false when nothing was solved
  std::size_t countersat = 0;
};

struct GreedyStep {
  std::string method;
  std::size_t gain = 0;
  std::size_t cumulative = 0;
};

struct MetricsReport {
  std::size_t problems = 0;
  std::size_t union_solved = 0;
  std::vector<MethodMetrics> methods;  // by solved count, then name
  std::vector<GreedyStep> greedy;
};

MetricsReport compute_metrics(const EvalMatrix& matrix, const MetricsOptions& options = {});

// Greedy max-cover over `subset` (all methods when empty). Ties go to the
// name that sorts first; stops when no method adds a solution.
std::vector<GreedyStep> greedy_cover(const EvalMatrix& matrix,
                                     const std::vector<std::string>& subset = {},
                                     const MetricsOptions& options = {});

std::string format_report(const MetricsReport& report);
std::string report_csv(const MetricsReport& report);
std::string format_greedy(const std::vector<GreedyStep>& steps, std::size_t problems);

struct DepComparisonRow {
  std::string name;
  std::size_t original = 0;
  std::size_t advised = 0;
  long difference = 0;
};

struct DepComparison {
  std::vector<DepComparisonRow> rows;  // by difference descending, then name
  double mean_original = 0;
  double mean_advised = 0;
};

DepComparison compare_dep_counts(const std::map<std::string, std::size_t>& original,
                                 const std::map<std::string, std::size_t>& advised);
std::string format_comparison(const DepComparison& comparison);

}  // namespace hammerkit::eval

#endif  // HAMMERKIT_METRICS_H_
