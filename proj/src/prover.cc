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

#include "hammerkit/prover.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <mutex>
#include <thread>

namespace hammerkit::prover {

namespace {

using Clock = std::chrono::steady_clock;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

std::string sanitize(const std::string& id) {
  std::string out;
  for (char c : id) out += std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ? c : '_';
  return out;
}

struct ChildOutput {
  std::string text;
  bool killed = false;
  bool spawn_failed = false;
  int exit_code = -1;
  double seconds = 0;
};

ChildOutput run_child(const std::string& command, double limit_seconds) {
  ChildOutput out;
  int fds[2];
  if (pipe2(fds, O_CLOEXEC) != 0) {
    out.spawn_failed = true;
    out.text = "pipe failed";
    return out;
  }
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(limit_seconds));
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    out.spawn_failed = true;
    out.text = "fork failed";
    return out;
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(fds[1], STDOUT_FILENO);
    dup2(fds[1], STDERR_FILENO);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  setpgid(pid, pid);
  close(fds[1]);

  auto kill_group = [&] {
    if (!out.killed) {
      kill(-pid, SIGKILL);
      out.killed = true;
    }
  };
  char buf[4096];
  bool eof = false;
  while (!eof) {
    const auto now = Clock::now();
    if (now >= deadline) kill_group();
    const int wait_ms =
        out.killed ? 200
                   : static_cast<int>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          deadline - now)
                                          .count()) +
                         1;
    pollfd p{fds[0], POLLIN, 0};
    const int r = poll(&p, 1, wait_ms);
    if (r < 0 && errno != EINTR) break;
    if (r <= 0) continue;
    const ssize_t n = read(fds[0], buf, sizeof buf);
    if (n > 0) {
      out.text.append(buf, static_cast<std::size_t>(n));
    } else if (n == 0 || errno != EINTR) {
      eof = true;
    }
  }
  close(fds[0]);
  int status = 0;
  while (true) {
    const pid_t w = waitpid(pid, &status, WNOHANG);
    if (w == pid || (w < 0 && errno != EINTR)) break;
    if (Clock::now() >= deadline) kill_group();
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  // Stragglers that outlived the shell.
  kill(-pid, SIGKILL);
  if (WIFEXITED(status)) out.exit_code = WEXITSTATUS(status);
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

}  // namespace

std::string status_name(Status status) {
  switch (status) {
    case Status::kTheorem:
      return "Theorem";
    case Status::kCounterSatisfiable:
      return "CounterSatisfiable";
    case Status::kTimeout:
      return "Timeout";
    case Status::kGaveUp:
      return "GaveUp";
    case Status::kError:
      return "Error";
  }
  return "Error";
}

Status parse_status_name(const std::string& name) {
  for (Status s : {Status::kTheorem, Status::kCounterSatisfiable, Status::kTimeout,
                   Status::kGaveUp, Status::kError}) {
    if (status_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown prover status: " + name);
}

std::vector<ProverSpec> read_prover_config(std::istream& in) {
  std::vector<ProverSpec> out;
  std::set<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto a = t.find('|');
    const auto b = a == std::string::npos ? a : t.find('|', a + 1);
    if (b == std::string::npos) throw std::invalid_argument("bad prover line: " + line);
    ProverSpec spec{trim(t.substr(0, a)), tptp::parse_format(trim(t.substr(a + 1, b - a - 1))),
                    trim(t.substr(b + 1)), true};
    if (spec.command.find("{file}") == std::string::npos) {
      throw std::invalid_argument("prover " + spec.id + ": command lacks {file}");
    }
    if (!ids.insert(spec.id).second) throw std::invalid_argument("duplicate prover " + spec.id);
    out.push_back(std::move(spec));
  }
  return out;
}

Status parse_szs_status(const std::string& output, bool* found) {
  static const std::regex re(R"(SZS status ([A-Za-z]+))");
  std::string last;
  for (auto it = std::sregex_iterator(output.begin(), output.end(), re);
       it != std::sregex_iterator(); ++it) {
    last = (*it)[1].str();
  }
  if (found) *found = !last.empty();
  if (last == "Theorem" || last == "Unsatisfiable" || last == "ContradictoryAxioms") {
    return Status::kTheorem;
  }
  if (last == "CounterSatisfiable" || last == "Satisfiable") return Status::kCounterSatisfiable;
  if (last == "Timeout" || last == "ResourceOut") return Status::kTimeout;
  if (last == "GaveUp" || last == "Unknown" || last == "Incomplete" || last == "Inappropriate") {
    return Status::kGaveUp;
  }
  return Status::kError;
}

std::vector<std::string> extract_used_premises(
    const std::string& output, const std::map<std::string, std::string>& label_to_premise) {
  std::set<std::string> labels;
  static const std::regex file_re(R"(file\([^,()]*,\s*([A-Za-z0-9_]+)\s*\))");
  for (auto it = std::sregex_iterator(output.begin(), output.end(), file_re);
       it != std::sregex_iterator(); ++it) {
    labels.insert((*it)[1].str());
  }
  std::string token;
  for (std::size_t i = 0; i <= output.size(); ++i) {
    const char c = i < output.size() ? output[i] : ' ';
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      token += c;
    } else if (!token.empty()) {
      labels.insert(token);
      token.clear();
    }
  }
  std::set<std::string> names;
  for (const auto& l : labels) {
    if (auto it = label_to_premise.find(l); it != label_to_premise.end()) names.insert(it->second);
  }
  return {names.begin(), names.end()};
}

ProverRun run_prover(const ProverSpec& spec, const std::string& problem_file, double timelimit,
                     const std::map<std::string, std::string>& label_to_premise) {
  ProverRun run;
  run.prover = spec.id;
  run.problem = problem_file;
  std::string cmd = spec.command;
  replace_all(cmd, "{file}", shell_quote(problem_file));
  replace_all(cmd, "{timelimit}", std::to_string(static_cast<long>(std::ceil(timelimit))));
  ChildOutput child = run_child(cmd, timelimit + kGraceSeconds);
  run.seconds = child.seconds;
  if (child.spawn_failed || child.exit_code == 127) {
    run.status = Status::kError;
    run.diagnostic = "spawn failure: " + (child.spawn_failed ? child.text : cmd);
    return run;
  }
  bool found = false;
  run.status = parse_szs_status(child.text, &found);
  if (!found) {
    run.status = child.killed ? Status::kTimeout : Status::kError;
    run.diagnostic = child.killed ? "killed at time limit" : "no SZS status line";
    return run;
  }
  if (run.status == Status::kTheorem && spec.proof_producing) {
    run.used_premises = extract_used_premises(child.text, label_to_premise);
    if (run.used_premises.empty()) run.diagnostic = "warning: no premises found in proof";
  }
  return run;
}

ExternalProver::ExternalProver(ProverSpec spec, std::string workdir)
    : spec_(std::move(spec)), workdir_(std::move(workdir)) {}

ProverRun ExternalProver::run(const Problem& problem, double timelimit) const {
  if (problem.fo.format != spec_.format) {
    throw std::invalid_argument("prover " + spec_.id + " expects " +
                                tptp::format_name(spec_.format) + " problems");
  }
  const std::string path = workdir_ + "/" + sanitize(problem.id) + "." + sanitize(spec_.id) + ".p";
  {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << problem.fo.serialize();
  }
  ProverRun run = run_prover(spec_, path, timelimit, problem.fo.premise_labels);
  run.problem = problem.id;
  std::remove(path.c_str());
  return run;
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

std::string csv_header() { return "problem,prover,slice,status,seconds,used_premises"; }

std::string csv_row(const ProverRun& run, const std::string& slice) {
  std::ostringstream out;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", run.seconds);
  out << run.problem << ',' << run.prover << ',' << slice << ',' << status_name(run.status) << ','
      << secs << ',';
  for (std::size_t i = 0; i < run.used_premises.size(); ++i) {
    if (i) out << ';';
    out << run.used_premises[i];
  }
  return out.str();
}

std::vector<CsvRecord> read_csv(std::istream& in) {
  std::vector<CsvRecord> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      if (line == csv_header()) continue;
    }
    if (trim(line).empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, ',')) cols.push_back(col);
    if (!line.empty() && line.back() == ',') cols.emplace_back();
    if (cols.size() != 6) throw std::invalid_argument("bad result row: " + line);
    CsvRecord rec;
    rec.run.problem = cols[0];
    rec.run.prover = cols[1];
    rec.slice = cols[2];
    rec.run.status = parse_status_name(cols[3]);
    rec.run.seconds = std::stod(cols[4]);
    std::stringstream ps(cols[5]);
    while (std::getline(ps, col, ';')) {
      if (!col.empty()) rec.run.used_premises.push_back(col);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace hammerkit::prover
