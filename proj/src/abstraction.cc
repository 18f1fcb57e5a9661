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

#include "provgroup/abstraction.h"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <tuple>

#include "provgroup/error.h"

namespace provgroup {
namespace {

void RequireKnown(const ProvGraph& g, const NodeSet& ids) {
  for (const NodeId& id : ids) {
    if (!g.contains(id)) {
      throw Error(ErrorCode::kUnknownNode, "no node '" + id.str() + "'");
    }
  }
}

std::string Join(const NodeSet& ids) {
  std::string out;
  for (const NodeId& id : ids) {
    if (!out.empty()) out += ", ";
    out += id.str();
  }
  return out;
}

const NodeSet& SourceOf(const AbstractionReport& report, const NodeId& id) {
  if (!report.graph.contains(id)) {
    throw Error(ErrorCode::kUnknownNode, "no node '" + id.str() + "'");
  }
  auto it = report.source_map.find(id);
  if (it == report.source_map.end()) {
    throw Error(ErrorCode::kNotAbstract, "'" + id.str() + "' is not abstract");
  }
  return it->second;
}

}  // namespace

NodeSet PathClosure(const ProvGraph& g, const NodeSet& targets) {
  RequireKnown(g, targets);
  // w lies on a path vi ~> vj iff w is reachable from some target and some
  // target is reachable from w.
  const NodeSet after = ReachableFromAny(g, targets, /*forward=*/true);
  const NodeSet before = ReachableFromAny(g, targets, /*forward=*/false);
  NodeSet out = targets;
  std::set_intersection(after.begin(), after.end(), before.begin(),
                        before.end(), std::inserter(out, out.end()));
  return out;
}

NodeSet Extend(const ProvGraph& g, const NodeSet& targets, NodeKind kind) {
  RequireKnown(g, targets);
  NodeSet out = targets;
  for (const NodeId& id : targets) {
    const std::size_t idx = *g.index_of(id);
    for (std::size_t e : g.out_edges(idx)) {
      const NodeId& other = g.edges()[e].object;
      if (g.node(other).kind == kind) out.insert(other);
    }
    for (std::size_t e : g.in_edges(idx)) {
      const NodeId& other = g.edges()[e].subject;
      if (g.node(other).kind == kind) out.insert(other);
    }
  }
  return out;
}

NodeSet GroupingClosure(const ProvGraph& g, const NodeSet& targets,
                        NodeKind kind) {
  NodeSet current = targets;
  while (true) {
    NodeSet next = Extend(g, PathClosure(g, current), kind);
    if (next == current) return current;
    current = std::move(next);
  }
}

ReplaceResult Replace(const ProvGraph& g, const NodeSet& targets,
                      ProvNode replacement) {
  if (targets.empty()) {
    throw Error(ErrorCode::kEmptyTargets, "nothing to replace");
  }
  RequireKnown(g, targets);
  if (g.contains(replacement.id)) {
    throw Error(ErrorCode::kFreshIdCollision,
                "replacement id '" + replacement.id.str() +
                    "' already names a node");
  }

  std::vector<ProvEdge> edges;
  std::set<std::tuple<NodeId, NodeId, RelKind>> rewired;
  std::vector<std::string> mistyped;
  for (const ProvEdge& e : g.edges()) {
    const bool subject_in = targets.contains(e.subject);
    const bool object_in = targets.contains(e.object);
    if (subject_in && object_in) continue;
    if (!subject_in && !object_in) {
      edges.push_back(e);
      continue;
    }
    const NodeKind required =
        subject_in ? SubjectKind(e.rel) : ObjectKind(e.rel);
    ProvEdge moved{subject_in ? replacement.id : e.subject,
                   object_in ? replacement.id : e.object, e.rel, std::nullopt};
    if (required != replacement.kind) {
      mistyped.push_back(std::string(RelKindName(e.rel)) + "(" +
                         moved.subject.str() + ", " + moved.object.str() + ")");
      continue;
    }
    if (rewired.emplace(moved.subject, moved.object, moved.rel).second) {
      edges.push_back(std::move(moved));
    }
  }
  if (!mistyped.empty()) {
    std::string message = "replacing {" + Join(targets) + "} by " +
                          std::string(NodeKindName(replacement.kind)) + " '" +
                          replacement.id.str() + "' creates mistyped edges:";
    for (const std::string& m : mistyped) message += " " + m;
    throw Error(ErrorCode::kTypeViolationAtBoundary, message);
  }

  std::vector<ProvNode> nodes;
  nodes.reserve(g.node_count() - targets.size() + 1);
  for (const ProvNode& n : g.nodes()) {
    if (!targets.contains(n.id)) nodes.push_back(n);
  }
  replacement.source = targets;
  nodes.push_back(std::move(replacement));

  ActivityEvents events = g.activity_events();
  std::erase_if(events,
                [&](const auto& entry) { return targets.contains(entry.first); });

  return ReplaceResult{
      ProvGraph::Build(std::move(nodes), std::move(edges), std::move(events),
                       BuildMode::kAllowTypeViolations),
      targets};
}

AbstractionReport Group(const ProvGraph& g, const GroupRequest& request,
                        const GroupOptions& options) {
  if (request.targets.empty()) {
    throw Error(ErrorCode::kEmptyTargets, "nothing to group");
  }
  RequireKnown(g, request.targets);
  if (g.contains(request.replacement_id)) {
    throw Error(ErrorCode::kFreshIdCollision,
                "replacement id '" + request.replacement_id.str() +
                    "' already names a node");
  }

  const NodeSet grouped =
      GroupingClosure(g, request.targets, request.replacement_kind);

  ProvNode abstract_node{.id = request.replacement_id,
                         .kind = request.replacement_kind};
  abstract_node.properties.emplace(std::string(kAbstractTypeKey),
                                   std::string(kAbstractTypeValue));
  for (const NodeId& id : grouped) {
    const auto& s = g.node(id).sensitivity;
    if (s && (!abstract_node.sensitivity || *s > *abstract_node.sensitivity)) {
      abstract_node.sensitivity = s;
    }
  }
  abstract_node.utility = 0.0;

  ReplaceResult replaced = Replace(g, grouped, std::move(abstract_node));

  AbstractionReport report;
  report.graph = std::move(replaced.graph);
  report.source_map.emplace(request.replacement_id, grouped);
  report.targets = request.targets;
  std::set_difference(grouped.begin(), grouped.end(), request.targets.begin(),
                      request.targets.end(),
                      std::inserter(report.collateral, report.collateral.end()));
  report.replaced_count = grouped.size();

  if (options.propagate_generators &&
      request.replacement_kind == NodeKind::kEntity) {
    return PropagateGenerators(g, report, request.replacement_id,
                               options.generator_id);
  }
  return report;
}

std::optional<EventTime> AbstractGenerationEvent(
    const ProvGraph& input, const AbstractionReport& report,
    const NodeId& abstract_node) {
  const NodeSet& source = SourceOf(report, abstract_node);
  std::optional<EventTime> latest;
  for (const NodeId& id : source) {
    const auto idx = input.index_of(id);
    if (!idx) throw Error(ErrorCode::kUnknownNode, "no node '" + id.str() + "'");
    if (input.nodes()[*idx].kind != NodeKind::kEntity) continue;
    for (std::size_t e : input.out_edges(*idx)) {
      const ProvEdge& edge = input.edges()[e];
      if (edge.rel != RelKind::kGenBy) continue;
      if (!edge.time) return std::nullopt;
      if (!latest || *latest < *edge.time) latest = edge.time;
    }
  }
  return latest;
}

std::optional<EventTime> AbstractUsageEvent(const ProvGraph& input,
                                            const AbstractionReport& report,
                                            const NodeId& abstract_node,
                                            const NodeId& by_activity) {
  const NodeSet& source = SourceOf(report, abstract_node);
  if (report.graph.find_edge(by_activity, abstract_node, RelKind::kUsed) ==
      nullptr) {
    throw Error(ErrorCode::kNoSuchUsage, "no used(" + by_activity.str() +
                                             ", " + abstract_node.str() + ")");
  }
  std::optional<EventTime> earliest;
  for (const NodeId& id : source) {
    const auto idx = input.index_of(id);
    if (!idx) throw Error(ErrorCode::kUnknownNode, "no node '" + id.str() + "'");
    if (input.nodes()[*idx].kind != NodeKind::kEntity) continue;
    for (std::size_t e : input.in_edges(*idx)) {
      const ProvEdge& edge = input.edges()[e];
      if (edge.rel != RelKind::kUsed) continue;
      if (!edge.time) return std::nullopt;
      if (!earliest || *edge.time < *earliest) earliest = edge.time;
    }
  }
  return earliest;
}

AbstractionReport PropagateGenerators(const ProvGraph& input,
                                      const AbstractionReport& report,
                                      const NodeId& abstract_node,
                                      std::optional<NodeId> generator_id) {
  SourceOf(report, abstract_node);
  const ProvGraph& g = report.graph;
  const std::size_t idx = *g.index_of(abstract_node);
  if (g.nodes()[idx].kind != NodeKind::kEntity) {
    throw Error(ErrorCode::kNotEntity,
                "'" + abstract_node.str() + "' is not an entity");
  }
  NodeSet generators;
  for (std::size_t e : g.out_edges(idx)) {
    if (g.edges()[e].rel == RelKind::kGenBy) {
      generators.insert(g.edges()[e].object);
    }
  }
  if (generators.size() <= 1) return report;

  if (!generator_id) {
    const std::array<const ProvGraph*, 2> graphs{&input, &g};
    generator_id = FreshId(graphs, abstract_node.str() + "_gen");
  } else if (input.contains(*generator_id)) {
    throw Error(ErrorCode::kFreshIdCollision,
                "replacement id '" + generator_id->str() +
                    "' already names a node");
  }
  const AbstractionReport step =
      Group(g, GroupRequest{generators, *generator_id, NodeKind::kActivity});

  // Re-express the new activity's source in terms of `input`.
  NodeSet flattened;
  for (const NodeId& id : step.source_map.at(*generator_id)) {
    auto it = report.source_map.find(id);
    if (it == report.source_map.end()) {
      flattened.insert(id);
    } else {
      flattened.insert(it->second.begin(), it->second.end());
    }
  }

  AbstractionReport out;
  for (const auto& [id, source] : report.source_map) {
    if (step.graph.contains(id)) out.source_map.emplace(id, source);
  }
  out.source_map.emplace(*generator_id, flattened);

  std::vector<ProvNode> nodes(step.graph.nodes().begin(),
                              step.graph.nodes().end());
  for (ProvNode& n : nodes) {
    if (n.id == *generator_id) n.source = flattened;
  }
  out.graph = ProvGraph::Build(
      std::move(nodes),
      std::vector<ProvEdge>(step.graph.edges().begin(),
                            step.graph.edges().end()),
      step.graph.activity_events(), BuildMode::kAllowTypeViolations);

  out.targets = report.targets;
  for (const ProvNode& n : input.nodes()) {
    if (!out.graph.contains(n.id)) ++out.replaced_count;
    if (!out.graph.contains(n.id) && !report.targets.contains(n.id)) {
      out.collateral.insert(n.id);
    }
  }
  return out;
}

NodeSet FlattenSource(std::span<const AbstractionReport> reports,
                      const NodeId& abstract_node) {
  if (reports.empty()) {
    throw Error(ErrorCode::kUnknownNode,
                "no reports to resolve '" + abstract_node.str() + "'");
  }
  auto last = reports.back().source_map.find(abstract_node);
  if (last == reports.back().source_map.end()) {
    throw Error(ErrorCode::kUnknownNode,
                "'" + abstract_node.str() + "' is not abstract in the last report");
  }
  NodeSet current = last->second;
  for (std::size_t i = reports.size() - 1; i-- > 0;) {
    NodeSet expanded;
    for (const NodeId& id : current) {
      auto it = reports[i].source_map.find(id);
      if (it == reports[i].source_map.end()) {
        expanded.insert(id);
      } else {
        expanded.insert(it->second.begin(), it->second.end());
      }
    }
    current = std::move(expanded);
  }
  return current;
}

NodeId FreshId(std::span<const ProvGraph* const> graphs, std::string_view base) {
  auto taken = [&](const NodeId& id) {
    return std::any_of(graphs.begin(), graphs.end(),
                       [&](const ProvGraph* g) { return g->contains(id); });
  };
  NodeId candidate{std::string(base)};
  for (int i = 1; taken(candidate); ++i) {
    candidate = NodeId(std::string(base) + "_" + std::to_string(i));
  }
  return candidate;
}

}  // namespace provgroup
