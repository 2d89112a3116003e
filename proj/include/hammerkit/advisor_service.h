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

// Static online advice over TCP.
//
// One request line (a term in the library's syntax) yields exactly one
// response line, after which the connection is closed:
//
//   PROVED <prover> <slice> <premise> ...
//   RANKING <name> ...            (at most 32 names)
//   ERROR parse: <message>
//   ERROR type: <message>
//
// The model and corpus are never modified while serving.

#ifndef HAMMERKIT_ADVISOR_SERVICE_H_
#define HAMMERKIT_ADVISOR_SERVICE_H_

#include <atomic>
#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <semaphore>
#include <string>
#include <thread>
#include <vector>

#include "hammerkit/corpus.h"
#include "hammerkit/features.h"
#include "hammerkit/learner.h"
#include "hammerkit/prover.h"

namespace hammerkit::service {

struct ServiceConfig {
  std::string host = "0.0.0.0";
  int port = 8080;  // 0 picks a free port
  std::vector<std::size_t> slices = {8, 32, 128, 512};
  std::vector<const prover::Prover*> provers;
  double budget = 30;  // seconds per query
  features::NormMode mode = features::NormMode::kSymst;
  std::size_t ranking_size = 32;
  std::size_t max_concurrent_runs = prover::kDefaultWorkers;
};

class AdvisorService {
 public:
  AdvisorService(const corpus::Corpus& corpus, const learners::Learner& model,
                 ServiceConfig config);
  ~AdvisorService();

  AdvisorService(const AdvisorService&) = delete;
  AdvisorService& operator=(const AdvisorService&) = delete;

  std::string handle_query(const std::string& line) const;

  // Binds and starts accepting; throws std::runtime_error on bind failure.
  void start();
  // Stops accepting and waits for in-flight connections.
  void stop();
  int port() const { return bound_port_; }

 private:
  void accept_loop();
  void serve_connection(int fd);

  const corpus::Corpus& corpus_;
  const learners::Learner& model_;
  ServiceConfig config_;
  std::vector<std::string> candidates_;
  mutable std::counting_semaphore<1 << 16> run_slots_;

  int listen_fd_ = -1;
  int bound_port_ = 0;
  std::atomic<bool> stopping_{false};
  std::thread acceptor_;
  std::mutex workers_mu_;
  struct Worker {
    std::thread thread;
    std::shared_ptr<std::atomic<bool>> done;
  };
  std::list<Worker> workers_;
};

// Sends one line to host:port and returns the response without its newline.
std::string query(const std::string& host, int port, const std::string& line,
                  double timeout_seconds = 60);

}  // namespace hammerkit::service

#endif  // HAMMERKIT_ADVISOR_SERVICE_H_
