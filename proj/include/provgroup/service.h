// Copyright 2026 The provgroup Authors
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

// HTTP facade over the library.
//
//   POST /sessions                      body: PROV-N      -> {"sessionId"}
//   PUT  /sessions/{id}/policy          body: policy text -> 204
//   POST /sessions/{id}/abstract?clearance=N&kind=entity|activity
//                                       &propagate=true|false
//   POST /sessions/{id}/chain?...       same parameters, applied to the
//                                       latest abstracted graph
//   GET  /sessions/{id}/graph?format=provn|dot|json
//   GET  /sessions/{id}/abstracted?format=provn|dot|json
//
// Each abstraction starts again from the session's original graph, so the
// result depends only on the request. Errors come back as
// {"error": {"code", "message", "line"?, "column"?}}.

#ifndef PROVGROUP_SERVICE_H_
#define PROVGROUP_SERVICE_H_

#include <cstddef>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "provgroup/abstraction.h"
#include "provgroup/policy.h"
#include "provgroup/prov_model.h"

namespace httplib {
class Server;
}

namespace provgroup {

struct AbstractParams {
  double clearance = 0.0;
  NodeKind kind = NodeKind::kEntity;
  bool propagate = false;
};

// One grouping step and the graph it was applied to.
struct ChainStep {
  ProvGraph input;
  PolicyOutcome outcome;
};

struct Session {
  std::mutex mu;
  ProvGraph original;
  std::optional<Policy> policy;
  std::optional<SensitivityMap> sensitivities;
  std::vector<ChainStep> chain;
};

// Response body for an abstraction: {graph, sourceMap, collateral,
// residualUtility, sensitivities, groupingSet, abstractEvents}.
nlohmann::json OutcomeToJson(const ProvGraph& input,
                             const PolicyOutcome& outcome);

// In-memory sessions with least-recently-used eviction.
class SessionStore {
 public:
  explicit SessionStore(std::size_t capacity = 64);

  std::string Create(ProvGraph graph);
  // Throws kUnknownSession.
  std::shared_ptr<Session> Get(const std::string& id);
  std::size_t size() const;

 private:
  std::size_t capacity_;
  mutable std::mutex mu_;
  std::mt19937_64 rng_;
  std::list<std::string> recency_;  // most recent first
  std::unordered_map<std::string,
                     std::pair<std::shared_ptr<Session>,
                               std::list<std::string>::iterator>>
      sessions_;
};

// Runs the policy on the session's original graph and makes the result the
// session's only chain step. Throws kNoPolicyLoaded.
nlohmann::json OrchestrateAbstract(Session& session,
                                   const AbstractParams& params);

// Runs the policy on the latest abstracted graph and appends a chain step.
// The returned sourceMap is expressed in original-graph ids.
nlohmann::json OrchestrateChain(Session& session, const AbstractParams& params);

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

class Service {
 public:
  explicit Service(std::size_t capacity = 64) : store_(capacity) {}

  HttpResponse Handle(const std::string& method, const std::string& path,
                      const std::map<std::string, std::string>& query,
                      const std::string& body);

  SessionStore& store() { return store_; }

 private:
  HttpResponse Dispatch(const std::string& method, const std::string& path,
                        const std::map<std::string, std::string>& query,
                        const std::string& body);

  SessionStore store_;
};

// Routes every request on `server` to `service`.
void BindService(httplib::Server& server, Service& service);

}  // namespace provgroup

#endif  // PROVGROUP_SERVICE_H_
