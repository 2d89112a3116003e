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

#include "hammerkit/metrics.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace hammerkit::eval {

namespace {

bool counts_as_solved(std::optional<prover::Status> s, const MetricsOptions& options) {
  if (!s) return false;
  return *s == prover::Status::kTheorem ||
         (options.countersat_as_solved && *s == prover::Status::kCounterSatisfiable);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()));
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c == 0) {
        line += r[c] + std::string(width[c] - r[c].size(), ' ');
      } else {
        line += "  " + std::string(width[c] - r[c].size(), ' ') + r[c];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

std::size_t EvalMatrix::add_problem(const std::string& problem) {
  auto [it, fresh] = problem_index_.emplace(problem, problems_.size());
  if (fresh) problems_.push_back(problem);
  return it->second;
}

std::size_t EvalMatrix::add_method(const std::string& method) {
  auto [it, fresh] = method_index_.emplace(method, methods_.size());
  if (fresh) methods_.push_back(method);
  return it->second;
}

void EvalMatrix::set(const std::string& problem, const std::string& method,
                     prover::Status status) {
  cells_[{add_problem(problem), add_method(method)}] = status;
}

std::optional<prover::Status> EvalMatrix::get(std::size_t problem, std::size_t method) const {
  auto it = cells_.find({problem, method});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

void EvalMatrix::merge(const EvalMatrix& other) {
  for (const auto& p : other.problems_) add_problem(p);
  for (const auto& m : other.methods_) add_method(m);
  for (const auto& [key, status] : other.cells_) {
    set(other.problems_[key.first], other.methods_[key.second], status);
  }
}

EvalMatrix matrix_from_csv(const std::vector<prover::CsvRecord>& records) {
  EvalMatrix m;
  for (const auto& r : records) {
    const std::string method =
        r.slice.empty() || r.slice == "-" ? r.run.prover : r.run.prover + "/" + r.slice;
    std::string problem = r.run.problem;
    if (auto cut = problem.rfind("__"); cut != std::string::npos) problem.resize(cut);
    m.set(problem, method, r.run.status);
  }
  return m;
}

MetricsReport compute_metrics(const EvalMatrix& matrix, const MetricsOptions& options) {
  const std::size_t np = matrix.problems().size();
  const std::size_t nm = matrix.methods().size();
  std::vector<std::size_t> solvers(np, 0);
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t m = 0; m < nm; ++m) solvers[p] += counts_as_solved(matrix.get(p, m), options);
  }
  MetricsReport report;
  report.problems = np;
  for (std::size_t p = 0; p < np; ++p) report.union_solved += solvers[p] > 0;
  for (std::size_t m = 0; m < nm; ++m) {
    MethodMetrics mm;
    mm.method = matrix.methods()[m];
    for (std::size_t p = 0; p < np; ++p) {
      const auto cell = matrix.get(p, m);
      if (cell == prover::Status::kCounterSatisfiable) ++mm.countersat;
      if (!counts_as_solved(cell, options)) continue;
      ++mm.solved;
      if (solvers[p] == 1) ++mm.unique;
      mm.sum_sotac += 1.0 / static_cast<double>(solvers[p]);
    }
    mm.sotac_defined = mm.solved > 0;
    mm.sotac = mm.sotac_defined ? mm.sum_sotac / static_cast<double>(mm.solved) : 0.0;
    mm.solved_pct = np ? 100.0 * static_cast<double>(mm.solved) / static_cast<double>(np) : 0.0;
    report.methods.push_back(mm);
  }
  std::sort(report.methods.begin(), report.methods.end(),
            [](const MethodMetrics& a, const MethodMetrics& b) {
              if (a.solved != b.solved) return a.solved > b.solved;
              return a.method < b.method;
            });
  report.greedy = greedy_cover(matrix, {}, options);
  return report;
}

std::vector<GreedyStep> greedy_cover(const EvalMatrix& matrix,
                                     const std::vector<std::string>& subset,
                                     const MetricsOptions& options) {
  std::vector<std::string> names = subset.empty() ? matrix.methods() : subset;
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::map<std::string, std::set<std::size_t>> solved;
  for (const auto& name : names) {
    auto it = std::find(matrix.methods().begin(), matrix.methods().end(), name);
    std::set<std::size_t>& s = solved[name];
    if (it == matrix.methods().end()) continue;
    const std::size_t m = static_cast<std::size_t>(it - matrix.methods().begin());
    for (std::size_t p = 0; p < matrix.problems().size(); ++p) {
      if (counts_as_solved(matrix.get(p, m), options)) s.insert(p);
    }
  }
  std::vector<GreedyStep> steps;
  std::set<std::size_t> covered;
  std::set<std::string> used;
  while (true) {
    const std::string* best = nullptr;
    std::size_t best_gain = 0;
    for (const auto& name : names) {
      if (used.count(name)) continue;
      std::size_t gain = 0;
      for (std::size_t p : solved[name]) gain += covered.count(p) == 0;
      if (gain > best_gain) {
        best = &name;
        best_gain = gain;
      }
    }
    if (!best) break;
    used.insert(*best);
    covered.insert(solved[*best].begin(), solved[*best].end());
    steps.push_back({*best, best_gain, covered.size()});
  }
  return steps;
}

std::string format_report(const MetricsReport& report) {
  std::map<std::string, std::size_t> greedy;
  for (const auto& g : report.greedy) greedy[g.method] = g.cumulative;
  std::vector<std::vector<std::string>> rows{
      {"Method", "Theorem (%)", "Unique", "SOTAC", "Sigma-SOTAC", "CounterSat", "Greedy (%)"}};
  for (const auto& m : report.methods) {
    std::string g = "-";
    if (auto it = greedy.find(m.method); it != greedy.end() && report.problems) {
      g = fixed(100.0 * static_cast<double>(it->second) / static_cast<double>(report.problems), 1);
    }
    rows.push_back({m.method, std::to_string(m.solved) + " (" + fixed(m.solved_pct, 1) + ")",
                    std::to_string(m.unique), m.sotac_defined ? fixed(m.sotac, 2) : "0.00*",
                    fixed(m.sum_sotac, 2), std::to_string(m.countersat), g});
  }
  std::string out = table(rows);
  out += "Union: " + std::to_string(report.union_solved) + " of " +
         std::to_string(report.problems) + " problems\n";
  return out;
}

std::string report_csv(const MetricsReport& report) {
  std::ostringstream out;
  out << "method,solved,solved_pct,unique,sotac,sum_sotac,countersat\n";
  for (const auto& m : report.methods) {
    out << m.method << ',' << m.solved << ',' << fixed(m.solved_pct, 3) << ',' << m.unique << ','
        << fixed(m.sotac, 6) << ',' << fixed(m.sum_sotac, 6) << ',' << m.countersat << '\n';
  }
  return out.str();
}

std::string format_greedy(const std::vector<GreedyStep>& steps, std::size_t problems) {
  std::vector<std::vector<std::string>> rows{{"Step", "Method", "Gain", "Cumulative", "(%)"}};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const double pct =
        problems ? 100.0 * static_cast<double>(steps[i].cumulative) / static_cast<double>(problems)
                 : 0.0;
    rows.push_back({std::to_string(i + 1), steps[i].method, std::to_string(steps[i].gain),
                    std::to_string(steps[i].cumulative), fixed(pct, 1)});
  }
  return table(rows);
}

DepComparison compare_dep_counts(const std::map<std::string, std::size_t>& original,
                                 const std::map<std::string, std::size_t>& advised) {
  DepComparison out;
  for (const auto& [name, o] : original) {
    auto it = advised.find(name);
    if (it == advised.end()) continue;
    out.rows.push_back({name, o, it->second,
                        static_cast<long>(o) - static_cast<long>(it->second)});
    out.mean_original += static_cast<double>(o);
    out.mean_advised += static_cast<double>(it->second);
  }
  if (!out.rows.empty()) {
    out.mean_original /= static_cast<double>(out.rows.size());
    out.mean_advised /= static_cast<double>(out.rows.size());
  }
  std::sort(out.rows.begin(), out.rows.end(),
            [](const DepComparisonRow& a, const DepComparisonRow& b) {
              if (a.difference != b.difference) return a.difference > b.difference;
              return a.name < b.name;
            });
  return out;
}

std::string format_comparison(const DepComparison& c) {
  std::vector<std::vector<std::string>> rows{{"Theorem", "Original", "Advised", "Difference"}};
  for (const auto& r : c.rows) {
    rows.push_back({r.name, std::to_string(r.original), std::to_string(r.advised),
                    std::to_string(r.difference)});
  }
  std::string out = table(rows);
  out += "Mean: " + fixed(c.mean_original, 2) + " original, " + fixed(c.mean_advised, 2) +
         " advised over " + std::to_string(c.rows.size()) + " theorems\n";
  return out;
}

}  // namespace hammerkit::eval
