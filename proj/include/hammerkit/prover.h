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

// Running provers on TPTP problems and reading back their verdicts.

#ifndef HAMMERKIT_PROVER_H_
#define HAMMERKIT_PROVER_H_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hammerkit/translate.h"

namespace hammerkit::prover {

enum class Status { kTheorem, kCounterSatisfiable, kTimeout, kGaveUp, kError };

std::string status_name(Status status);
Status parse_status_name(const std::string& name);  // throws std::invalid_argument

struct ProverRun {
  std::string prover;
  std::string problem;
  Status status = Status::kError;
  double seconds = 0;
  std::vector<std::string> used_premises;  // premise (theorem) names
  std::string diagnostic;
};

struct Problem {
  std::string id;
  tptp::FoProblem fo;
};

class Prover {
 public:
  virtual ~Prover() = default;
  virtual std::string id() const = 0;
  virtual tptp::Format format() const = 0;
  virtual ProverRun run(const Problem& problem, double timelimit) const = 0;
};

struct ProverSpec {
  std::string id;
  tptp::Format format = tptp::Format::kFof;
  std::string command;  // contains {file}; may contain {timelimit}
  bool proof_producing = true;
};

// One spec per line: "id | format | command template". Blank lines and lines
// starting with '#' are skipped.
std::vector<ProverSpec> read_prover_config(std::istream& in);

// Status from the last "SZS status X" line; Error when there is none.
Status parse_szs_status(const std::string& output, bool* found = nullptr);

// Axiom labels named by file(..., label) annotations or appearing as tokens,
// mapped through label_to_premise. Only known labels are returned.
std::vector<std::string> extract_used_premises(
    const std::string& output, const std::map<std::string, std::string>& label_to_premise);

// Launches "/bin/sh -c <instantiated template>" in its own process group and
// kills the group at timelimit + kGraceSeconds.
inline constexpr double kGraceSeconds = 1.0;
ProverRun run_prover(const ProverSpec& spec, const std::string& problem_file, double timelimit,
                     const std::map<std::string, std::string>& label_to_premise = {});

class ExternalProver : public Prover {
 public:
  ExternalProver(ProverSpec spec, std::string workdir);
  std::string id() const override { return spec_.id; }
  tptp::Format format() const override { return spec_.format; }
  ProverRun run(const Problem& problem, double timelimit) const override;

 private:
  ProverSpec spec_;
  std::string workdir_;
};

// Runs fn(0..count-1) on at most `workers` threads.
inline constexpr std::size_t kDefaultWorkers = 14;
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& fn);

// "problem,prover,slice,status,seconds,used_premises" with ';' between premises.
std::string csv_header();
std::string csv_row(const ProverRun& run, const std::string& slice);
struct CsvRecord {
  ProverRun run;
  std::string slice;
};
std::vector<CsvRecord> read_csv(std::istream& in);

}  // namespace hammerkit::prover

#endif  // HAMMERKIT_PROVER_H_
