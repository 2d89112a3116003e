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

#include "hammerkit/advisor_service.h"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <map>
#include <stdexcept>

#include "hammerkit/hol_parser.h"
#include "hammerkit/minimize.h"
#include "hammerkit/translate.h"

namespace hammerkit::service {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_left(Clock::time_point deadline) {
  return std::chrono::duration<double>(deadline - Clock::now()).count();
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

bool send_all(int fd, const std::string& data) {
  std::size_t sent = 0;
  while (sent < data.size()) {
    const ssize_t n = send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) return false;
    sent += static_cast<std::size_t>(n);
  }
  return true;
}

// Reads up to the first newline; false on timeout or when the peer sent nothing.
bool read_line(int fd, std::string& line, double timeout_seconds) {
  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(timeout_seconds));
  char buf[4096];
  while (line.find('\n') == std::string::npos && line.size() < (1u << 20)) {
    const double left = seconds_left(deadline);
    if (left <= 0) return false;
    pollfd p{fd, POLLIN, 0};
    const int r = poll(&p, 1, static_cast<int>(left * 1000) + 1);
    if (r < 0 && errno == EINTR) continue;
    if (r <= 0) return false;
    const ssize_t n = recv(fd, buf, sizeof buf, 0);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    line.append(buf, static_cast<std::size_t>(n));
  }
  if (auto nl = line.find('\n'); nl != std::string::npos) line.resize(nl);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

AdvisorService::AdvisorService(const corpus::Corpus& corpus, const learners::Learner& model,
                               ServiceConfig config)
    : corpus_(corpus),
      model_(model),
      config_(std::move(config)),
      run_slots_(static_cast<std::ptrdiff_t>(std::max<std::size_t>(1, config_.max_concurrent_runs))) {
  for (const auto& e : corpus_.entries()) {
    if (!corpus_.is_trivial(e.name)) candidates_.push_back(e.name);
  }
  std::sort(config_.slices.begin(), config_.slices.end());
}

AdvisorService::~AdvisorService() { stop(); }

std::string AdvisorService::handle_query(const std::string& line) const {
  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(config_.budget));
  hol::Signature sig = corpus_.signature();
  sig.set_mode(hol::Signature::Mode::kSealed);
  hol::Term goal = hol::mk_true();
  try {
    goal = hol::parse_term(line, sig);
  } catch (const hol::SyntaxError& e) {
    return "ERROR parse: " + one_line(e.what());
  } catch (const std::exception& e) {
    return "ERROR type: " + one_line(e.what());
  }
  if (goal.type() != hol::Type::boolean()) {
    return "ERROR type: query has type " + goal.type().to_string() + ", expected bool";
  }

  const learners::Ranking ranking =
      model_.rank(features::extract_features(goal, config_.mode), candidates_);

  auto build = [&](const std::vector<std::string>& premises, const std::string& id,
                   tptp::Format format) {
    std::vector<tptp::NamedFormula> named;
    for (const auto& p : premises) named.push_back({p, corpus_.get(p).statement});
    return prover::Problem{id, tptp::translate(format, goal, named, corpus_.signature())};
  };

  struct Job {
    std::size_t slice;
    const prover::Prover* prover;
    prover::ProverRun run;
  };
  std::vector<Job> jobs;
  for (std::size_t s : config_.slices) {
    for (const prover::Prover* p : config_.provers) jobs.push_back({s, p, {}});
  }
  std::vector<std::thread> threads;
  for (auto& job : jobs) {
    threads.emplace_back([&, &job = job] {
      const double left = seconds_left(deadline);
      if (left <= 0 || !run_slots_.try_acquire_for(std::chrono::duration<double>(left))) return;
      try {
        const std::size_t n = std::min(job.slice, ranking.size());
        const std::vector<std::string> premises(ranking.begin(),
                                                ranking.begin() + static_cast<long>(n));
        job.run = job.prover->run(build(premises, "query__" + std::to_string(job.slice),
                                        job.prover->format()),
                                  std::max(0.0, seconds_left(deadline)));
      } catch (const std::exception& e) {
        job.run.status = prover::Status::kError;
        job.run.diagnostic = e.what();
      }
      run_slots_.release();
    });
  }
  for (auto& t : threads) t.join();

  for (const auto& job : jobs) {
    if (job.run.status != prover::Status::kTheorem || seconds_left(deadline) < 0) continue;
    std::vector<std::string> premises = job.run.used_premises;
    const double left = seconds_left(deadline);
    if (left > 0 && run_slots_.try_acquire_for(std::chrono::duration<double>(left))) {
      auto rebuild = [&](const std::vector<std::string>& ps) {
        return build(ps, "query__min" + std::to_string(ps.size()), job.prover->format());
      };
      prover::MinimizeResult m =
          prover::pseudo_minimize(*job.prover, rebuild, premises, std::max(0.0, left));
      run_slots_.release();
      if (m.proved) premises = m.premises;
    }
    std::string out = "PROVED " + job.prover->id() + " " + std::to_string(job.slice);
    for (const auto& p : premises) out += " " + p;
    return out;
  }
  std::string out = "RANKING";
  for (std::size_t i = 0; i < std::min(config_.ranking_size, ranking.size()); ++i) {
    out += " " + ranking[i];
  }
  return out;
}

void AdvisorService::start() {
  listen_fd_ = socket(AF_INET, SOCK_STREAM | SOCK_CLOEXEC, 0);
  if (listen_fd_ < 0) throw std::runtime_error(std::string("socket: ") + std::strerror(errno));
  const int one = 1;
  setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(static_cast<uint16_t>(config_.port));
  if (inet_pton(AF_INET, config_.host.c_str(), &addr.sin_addr) != 1) {
    close(listen_fd_);
    listen_fd_ = -1;
    throw std::runtime_error("bad listen address " + config_.host);
  }
  if (bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 ||
      listen(listen_fd_, 64) != 0) {
    const std::string err = std::strerror(errno);
    close(listen_fd_);
    listen_fd_ = -1;
    throw std::runtime_error("cannot listen on " + config_.host + ":" +
                             std::to_string(config_.port) + ": " + err);
  }
  socklen_t len = sizeof addr;
  getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  bound_port_ = ntohs(addr.sin_port);
  stopping_ = false;
  acceptor_ = std::thread([this] { accept_loop(); });
}

void AdvisorService::accept_loop() {
  while (!stopping_) {
    pollfd p{listen_fd_, POLLIN, 0};
    if (poll(&p, 1, 100) <= 0) continue;
    const int fd = accept4(listen_fd_, nullptr, nullptr, SOCK_CLOEXEC);
    if (fd < 0) continue;
    std::lock_guard<std::mutex> lock(workers_mu_);
    for (auto it = workers_.begin(); it != workers_.end();) {
      if (*it->done) {
        it->thread.join();
        it = workers_.erase(it);
      } else {
        ++it;
      }
    }
    auto done = std::make_shared<std::atomic<bool>>(false);
    workers_.push_back({std::thread([this, fd, done] {
                          serve_connection(fd);
                          *done = true;
                        }),
                        done});
  }
}

void AdvisorService::serve_connection(int fd) {
  std::string line;
  if (read_line(fd, line, config_.budget)) {
    std::string response;
    try {
      response = handle_query(line);
    } catch (const std::exception& e) {
      response = "ERROR type: " + one_line(e.what());
    }
    send_all(fd, response + "\n");
  }
  shutdown(fd, SHUT_RDWR);
  close(fd);
}

void AdvisorService::stop() {
  if (listen_fd_ < 0) return;
  stopping_ = true;
  if (acceptor_.joinable()) acceptor_.join();
  close(listen_fd_);
  listen_fd_ = -1;
  std::list<Worker> workers;
  {
    std::lock_guard<std::mutex> lock(workers_mu_);
    workers.swap(workers_);
  }
  for (auto& w : workers) w.thread.join();
}

std::string query(const std::string& host, int port, const std::string& line,
                  double timeout_seconds) {
  const int fd = socket(AF_INET, SOCK_STREAM | SOCK_CLOEXEC, 0);
  if (fd < 0) throw std::runtime_error("socket failed");
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(static_cast<uint16_t>(port));
  inet_pton(AF_INET, host.c_str(), &addr.sin_addr);
  if (connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
    close(fd);
    throw std::runtime_error("cannot connect to " + host + ":" + std::to_string(port));
  }
  send_all(fd, line + "\n");
  std::string response;
  const bool ok = read_line(fd, response, timeout_seconds);
  close(fd);
  if (!ok) throw std::runtime_error("no response from service");
  return response;
}

}  // namespace hammerkit::service
