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

#include "hammerkit/fixture_prover.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace hammerkit::prover {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

// Drops parentheses that enclose the whole string.
std::string strip_parens(std::string s) {
  while (true) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0 && i + 1 != s.size()) return s;
    }
    s = s.substr(1, s.size() - 2);
  }
}

std::vector<std::string> split_top(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (depth == 0 && s.compare(i, sep.size(), sep) == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + sep.size();
      i = start - 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

struct Shape {
  std::vector<std::string> antecedents;  // empty for facts
  std::string consequent;
};

Shape shape_of(const std::string& normal) {
  const std::string body = strip_parens(normal);
  if (body.rfind("![", 0) == 0 || body.rfind("?[", 0) == 0) return {{}, body};
  std::vector<std::string> sides = split_top(body, " => ");
  if (sides.size() != 2) return {{}, body};
  Shape out;
  for (const auto& a : split_top(strip_parens(sides[0]), " & ")) {
    out.antecedents.push_back(strip_parens(a));
  }
  out.consequent = strip_parens(sides[1]);
  return out;
}

}  // namespace

std::string alpha_normal_text(const std::string& formula) {
  std::map<std::string, std::string> names;
  std::string out;
  for (std::size_t i = 0; i < formula.size();) {
    if (!ident_char(formula[i])) {
      out += formula[i++];
      continue;
    }
    std::size_t j = i;
    while (j < formula.size() && ident_char(formula[j])) ++j;
    std::string tok = formula.substr(i, j - i);
    const bool prefixed = i > 0 && formula[i - 1] == '$';
    if (!prefixed && std::isupper(static_cast<unsigned char>(tok[0]))) {
      auto [it, fresh] = names.emplace(tok, "V" + std::to_string(names.size()));
      tok = it->second;
    }
    out += tok;
    i = j;
  }
  return out;
}

ChainResult chain_prove(const std::vector<std::pair<std::string, std::string>>& axioms,
                        const std::string& conjecture, int depth) {
  std::vector<std::string> normal;
  for (const auto& a : axioms) normal.push_back(strip_parens(alpha_normal_text(a.second)));
  const std::string goal_text = strip_parens(alpha_normal_text(conjecture));
  ChainResult result;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (normal[i] == goal_text) {
      result.proved = true;
      result.used_labels = {axioms[i].first};
      return result;
    }
  }

  std::map<std::string, std::set<std::size_t>> known;
  std::vector<std::pair<std::size_t, Shape>> rules;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    Shape s = shape_of(normal[i]);
    if (s.antecedents.empty()) {
      known.emplace(s.consequent, std::set<std::size_t>{i});
    } else {
      rules.emplace_back(i, std::move(s));
    }
  }
  const Shape goal = shape_of(goal_text);
  for (const auto& a : goal.antecedents) known.emplace(a, std::set<std::size_t>{});

  auto finish = [&](const std::set<std::size_t>& used) {
    result.proved = true;
    for (std::size_t i : used) result.used_labels.push_back(axioms[i].first);
    return result;
  };
  if (auto it = known.find(goal.consequent); it != known.end()) return finish(it->second);
  for (int round = 0; round < depth; ++round) {
    std::map<std::string, std::set<std::size_t>> fresh;
    for (const auto& [index, rule] : rules) {
      if (known.count(rule.consequent) || fresh.count(rule.consequent)) continue;
      std::set<std::size_t> used{index};
      bool ready = true;
      for (const auto& a : rule.antecedents) {
        auto it = known.find(a);
        if (it == known.end()) {
          ready = false;
          break;
        }
        used.insert(it->second.begin(), it->second.end());
      }
      if (ready) fresh.emplace(rule.consequent, std::move(used));
    }
    if (fresh.empty()) break;
    known.merge(fresh);
    if (auto it = known.find(goal.consequent); it != known.end()) return finish(it->second);
  }
  return result;
}

ParsedProblem parse_problem_text(const std::string& text) {
  ParsedProblem out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    const auto open = line.find('(');
    if (line.empty() || line[0] == '%' || open == std::string::npos) continue;
    const std::string inner = line.substr(open + 1, line.rfind(")") - open - 1);
    std::vector<std::string> parts = split_top(inner, ",");
    if (parts.size() < 3) continue;
    std::string formula = parts[2];
    for (std::size_t k = 3; k < parts.size(); ++k) formula += "," + parts[k];
    const std::string role = trim(parts[1]);
    if (role == "conjecture") {
      out.conjecture = trim(formula);
    } else if (role != "type") {
      out.axioms.emplace_back(trim(parts[0]), trim(formula));
    }
  }
  return out;
}

FixtureProver::FixtureProver(std::string id, int depth, tptp::Format format)
    : id_(std::move(id)), depth_(depth), format_(format) {}

FixtureProver::FixtureProver(std::string id, std::map<std::string, ProverRun> table)
    : id_(std::move(id)), oracle_(true), table_(std::move(table)) {}

ProverRun FixtureProver::run(const Problem& problem, double) const {
  ProverRun run;
  run.prover = id_;
  run.problem = problem.id;
  std::set<std::string> allowed;
  for (const auto& [label, name] : problem.fo.premise_labels) allowed.insert(name);
  if (oracle_) {
    auto it = table_.find(problem.id);
    if (it == table_.end()) {
      run.status = Status::kGaveUp;
      return run;
    }
    run.status = it->second.status;
    if (run.status == Status::kTheorem) {
      for (const auto& p : it->second.used_premises) {
        if (allowed.count(p)) run.used_premises.push_back(p);
      }
    }
    return run;
  }
  ChainResult r = chain_prove(problem.fo.axioms, problem.fo.conjecture.second, depth_);
  run.status = r.proved ? Status::kTheorem : Status::kGaveUp;
  std::set<std::string> used;
  for (const auto& label : r.used_labels) {
    if (auto it = problem.fo.premise_labels.find(label); it != problem.fo.premise_labels.end()) {
      used.insert(it->second);
    }
  }
  run.used_premises.assign(used.begin(), used.end());
  return run;
}

}  // namespace hammerkit::prover
