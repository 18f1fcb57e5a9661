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

#include "provgroup/service.h"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <regex>

#include "provgroup/error.h"
#include "provgroup/json_export.h"
#include "provgroup/provn_io.h"

namespace provgroup {

nlohmann::json OutcomeToJson(const ProvGraph& input,
                             const PolicyOutcome& outcome) {
  nlohmann::json out;
  out["graph"] = GraphToJson(outcome.report.graph);
  out["sourceMap"] = SourceMapToJson(outcome.report.source_map);
  out["collateral"] = NodeSetToJson(outcome.report.collateral);
  out["residualUtility"] = outcome.residual_utility
                               ? nlohmann::json(*outcome.residual_utility)
                               : nlohmann::json(nullptr);
  out["sensitivities"] = SensitivitiesToJson(outcome.sensitivities);
  out["groupingSet"] = NodeSetToJson(outcome.grouping_set);
  out["abstractEvents"] = AbstractEventsToJson(input, outcome.report);
  return out;
}

SessionStore::SessionStore(std::size_t capacity)
    : capacity_(capacity == 0 ? 1 : capacity), rng_(std::random_device{}()) {}

std::string SessionStore::Create(ProvGraph graph) {
  auto session = std::make_shared<Session>();
  session->original = std::move(graph);
  std::lock_guard lock(mu_);
  std::string id;
  do {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(rng_()));
    id = buf;
  } while (sessions_.contains(id));
  recency_.push_front(id);
  sessions_.emplace(id, std::make_pair(std::move(session), recency_.begin()));
  while (sessions_.size() > capacity_) {
    sessions_.erase(recency_.back());
    recency_.pop_back();
  }
  return id;
}

std::shared_ptr<Session> SessionStore::Get(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw Error(ErrorCode::kUnknownSession, "no session '" + id + "'");
  }
  recency_.splice(recency_.begin(), recency_, it->second.second);
  return it->second.first;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

namespace {

ApplyOptions ToApplyOptions(const AbstractParams& params,
                            std::span<const ProvGraph* const> taken) {
  return ApplyOptions{.clearance = params.clearance,
                      .kind = params.kind,
                      .propagate_generators = params.propagate,
                      .replacement_id = FreshId(taken, "abs")};
}

}  // namespace

nlohmann::json OrchestrateAbstract(Session& session,
                                   const AbstractParams& params) {
  if (!session.policy) {
    throw Error(ErrorCode::kNoPolicyLoaded, "load a policy first");
  }
  const std::array<const ProvGraph*, 1> taken{&session.original};
  PolicyOutcome outcome = ApplyPolicy(session.original, *session.policy,
                                      ToApplyOptions(params, taken));
  nlohmann::json out = OutcomeToJson(session.original, outcome);
  session.chain.clear();
  session.chain.push_back(ChainStep{session.original, std::move(outcome)});
  return out;
}

nlohmann::json OrchestrateChain(Session& session, const AbstractParams& params) {
  if (!session.policy) {
    throw Error(ErrorCode::kNoPolicyLoaded, "load a policy first");
  }
  if (session.chain.empty()) {
    throw Error(ErrorCode::kNoAbstraction, "run an abstraction first");
  }
  ProvGraph input = session.chain.back().outcome.report.graph;
  std::vector<const ProvGraph*> taken{&session.original};
  for (const ChainStep& step : session.chain) {
    taken.push_back(&step.outcome.report.graph);
  }
  PolicyOutcome outcome =
      ApplyPolicy(input, *session.policy, ToApplyOptions(params, taken));
  nlohmann::json out = OutcomeToJson(input, outcome);
  session.chain.push_back(ChainStep{std::move(input), std::move(outcome)});

  std::vector<AbstractionReport> reports;
  for (const ChainStep& step : session.chain) {
    reports.push_back(step.outcome.report);
  }
  std::map<NodeId, NodeSet> flattened;
  for (const ProvNode& n : reports.back().graph.nodes()) {
    for (std::size_t k = reports.size(); k-- > 0;) {
      if (reports[k].source_map.contains(n.id)) {
        flattened.emplace(
            n.id, FlattenSource(std::span(reports).first(k + 1), n.id));
        break;
      }
    }
  }
  out["sourceMap"] = SourceMapToJson(flattened);
  out["chainLength"] = session.chain.size();
  return out;
}

namespace {

HttpResponse JsonResponse(int status, const nlohmann::json& body) {
  return HttpResponse{status, "application/json", body.dump()};
}

HttpResponse ErrorResponse(const Error& e) {
  int status = 400;
  switch (e.code()) {
    case ErrorCode::kUnknownSession: status = 404; break;
    case ErrorCode::kNoPolicyLoaded:
    case ErrorCode::kNoAbstraction: status = 409; break;
    case ErrorCode::kEmptyTargets:
    case ErrorCode::kTypeViolationAtBoundary:
    case ErrorCode::kFreshIdCollision:
    case ErrorCode::kNotAbstract:
    case ErrorCode::kNotEntity:
    case ErrorCode::kNoSuchUsage: status = 500; break;
    default: break;
  }
  nlohmann::json error{{"code", ErrorCodeName(e.code())},
                       {"message", e.detail()}};
  if (e.position()) {
    error["line"] = e.position()->line;
    error["column"] = e.position()->column;
  }
  return JsonResponse(status, {{"error", std::move(error)}});
}

std::string Param(const std::map<std::string, std::string>& query,
                  const std::string& key, const std::string& fallback) {
  auto it = query.find(key);
  return it == query.end() ? fallback : it->second;
}

AbstractParams ParseAbstractParams(
    const std::map<std::string, std::string>& query) {
  AbstractParams params;
  auto clearance = query.find("clearance");
  if (clearance == query.end()) {
    throw Error(ErrorCode::kPreconditionViolation,
                "missing query parameter 'clearance'");
  }
  const std::string& text = clearance->second;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), params.clearance);
  if (ec != std::errc() || end != text.data() + text.size() ||
      !std::isfinite(params.clearance) || params.clearance < 0) {
    throw Error(ErrorCode::kPreconditionViolation,
                "clearance must be a non-negative number, got '" + text + "'");
  }
  const std::string kind = Param(query, "kind", "entity");
  auto parsed = ParseNodeKind(kind);
  if (!parsed) {
    throw Error(ErrorCode::kPreconditionViolation,
                "kind must be 'entity' or 'activity', got '" + kind + "'");
  }
  params.kind = *parsed;
  const std::string propagate = Param(query, "propagate", "false");
  if (propagate != "true" && propagate != "false") {
    throw Error(ErrorCode::kPreconditionViolation,
                "propagate must be 'true' or 'false', got '" + propagate + "'");
  }
  params.propagate = propagate == "true";
  return params;
}

SensitivityMap SensitivitiesOf(const ProvGraph& g) {
  SensitivityMap out;
  for (const ProvNode& n : g.nodes()) {
    if (n.sensitivity) out.emplace(n.id, *n.sensitivity);
  }
  return out;
}

HttpResponse RenderGraph(const ProvGraph& g, const std::string& format) {
  if (format == "provn") {
    return {200, "text/provenance-notation", SerializeProvN(g)};
  }
  if (format == "dot") {
    const SensitivityMap s = SensitivitiesOf(g);
    return {200, "text/vnd.graphviz", ExportDot(g, &s)};
  }
  if (format == "json") return JsonResponse(200, GraphToJson(g));
  throw Error(ErrorCode::kPreconditionViolation,
              "format must be provn, dot or json, got '" + format + "'");
}

}  // namespace

HttpResponse Service::Handle(const std::string& method, const std::string& path,
                             const std::map<std::string, std::string>& query,
                             const std::string& body) {
  try {
    return Dispatch(method, path, query, body);
  } catch (const Error& e) {
    return ErrorResponse(e);
  }
}

HttpResponse Service::Dispatch(const std::string& method,
                               const std::string& path,
                               const std::map<std::string, std::string>& query,
                               const std::string& body) {
  static const std::regex kSessionRoute(R"(^/sessions/([^/]+)/([a-z]+)$)");
  if (path == "/sessions") {
    if (method != "POST") {
      return JsonResponse(405, {{"error", {{"code", "MethodNotAllowed"}}}});
    }
    ProvGraph graph = ParseProvN(body);
    return JsonResponse(201, {{"sessionId", store_.Create(std::move(graph))}});
  }

  std::smatch match;
  if (!std::regex_match(path, match, kSessionRoute)) {
    return JsonResponse(404, {{"error",
                               {{"code", "NotFound"},
                                {"message", "no route for " + path}}}});
  }
  const std::string action = match[2];
  const std::shared_ptr<Session> session = store_.Get(match[1]);
  std::lock_guard lock(session->mu);

  if (action == "policy" && method == "PUT") {
    Policy policy = ParsePolicy(body);
    SensitivityMap sensitivities = EvaluatePolicy(session->original, policy);
    session->policy = std::move(policy);
    session->sensitivities = std::move(sensitivities);
    session->chain.clear();
    return HttpResponse{204, "application/json", ""};
  }
  if (action == "abstract" && method == "POST") {
    return JsonResponse(200,
                        OrchestrateAbstract(*session, ParseAbstractParams(query)));
  }
  if (action == "chain" && method == "POST") {
    return JsonResponse(200,
                        OrchestrateChain(*session, ParseAbstractParams(query)));
  }
  if (action == "graph" && method == "GET") {
    const ProvGraph g =
        session->sensitivities
            ? AnnotateSensitivities(session->original, *session->sensitivities)
            : session->original;
    return RenderGraph(g, Param(query, "format", "json"));
  }
  if (action == "abstracted" && method == "GET") {
    if (session->chain.empty()) {
      throw Error(ErrorCode::kNoAbstraction, "run an abstraction first");
    }
    return RenderGraph(session->chain.back().outcome.report.graph,
                       Param(query, "format", "json"));
  }
  return JsonResponse(405, {{"error",
                             {{"code", "MethodNotAllowed"},
                              {"message", method + " " + path}}}});
}

}  // namespace provgroup
