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

#include "provgroup/prov_model.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <tuple>

#include "provgroup/error.h"

namespace provgroup {

std::string_view NodeKindName(NodeKind kind) {
  return kind == NodeKind::kEntity ? "entity" : "activity";
}

std::string_view RelKindName(RelKind rel) {
  return rel == RelKind::kUsed ? "used" : "wasGeneratedBy";
}

std::optional<NodeKind> ParseNodeKind(std::string_view text) {
  if (text == "entity") return NodeKind::kEntity;
  if (text == "activity") return NodeKind::kActivity;
  return std::nullopt;
}

ProvNode Entity(std::string id, PropertyMap properties) {
  return ProvNode{.id = NodeId(std::move(id)),
                  .kind = NodeKind::kEntity,
                  .properties = std::move(properties)};
}

ProvNode Activity(std::string id, PropertyMap properties) {
  return ProvNode{.id = NodeId(std::move(id)),
                  .kind = NodeKind::kActivity,
                  .properties = std::move(properties)};
}

ProvEdge Used(std::string activity, std::string entity,
              std::optional<EventTime> time) {
  return ProvEdge{NodeId(std::move(activity)), NodeId(std::move(entity)),
                  RelKind::kUsed, time};
}

ProvEdge GenBy(std::string entity, std::string activity,
               std::optional<EventTime> time) {
  return ProvEdge{NodeId(std::move(entity)), NodeId(std::move(activity)),
                  RelKind::kGenBy, time};
}

bool EdgeKeyLess(const ProvEdge& a, const ProvEdge& b) {
  return std::tie(a.subject, a.object, a.rel) <
         std::tie(b.subject, b.object, b.rel);
}

namespace {

bool ValidAnnotation(const std::optional<double>& value) {
  return !value || (std::isfinite(*value) && *value >= 0.0);
}

std::string EdgeText(const ProvEdge& e) {
  return std::string(RelKindName(e.rel)) + "(" + e.subject.str() + ", " +
         e.object.str() + ")";
}

}  // namespace

ProvGraph ProvGraph::Build(std::vector<ProvNode> nodes,
                           std::vector<ProvEdge> edges,
                           ActivityEvents activity_events, BuildMode mode) {
  ProvGraph g;
  std::sort(nodes.begin(), nodes.end(),
            [](const ProvNode& a, const ProvNode& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const ProvNode& n = nodes[i];
    if (n.id.empty()) {
      throw Error(ErrorCode::kInvalidAnnotation, "node id must be nonempty");
    }
    if (i > 0 && nodes[i - 1].id == n.id) {
      throw Error(ErrorCode::kDuplicateNodeId,
                  "node '" + n.id.str() + "' declared more than once");
    }
    if (!ValidAnnotation(n.sensitivity) || !ValidAnnotation(n.utility)) {
      throw Error(ErrorCode::kInvalidAnnotation,
                  "sensitivity and utility of '" + n.id.str() +
                      "' must be finite and non-negative");
    }
    if (n.source && n.source->empty()) {
      throw Error(ErrorCode::kInvalidAnnotation,
                  "abstract node '" + n.id.str() + "' has an empty source");
    }
  }
  g.nodes_ = std::move(nodes);

  std::sort(edges.begin(), edges.end(), EdgeKeyLess);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const ProvEdge& e = edges[i];
    const ProvNode* subject = g.find(e.subject);
    const ProvNode* object = g.find(e.object);
    if (subject == nullptr || object == nullptr) {
      throw Error(ErrorCode::kDanglingEdgeEndpoint,
                  EdgeText(e) + " refers to an undeclared node '" +
                      (subject == nullptr ? e.subject : e.object).str() + "'");
    }
    if (mode == BuildMode::kStrict &&
        (subject->kind != SubjectKind(e.rel) ||
         object->kind != ObjectKind(e.rel))) {
      throw Error(ErrorCode::kEdgeTypeViolation,
                  EdgeText(e) + " requires subject kind " +
                      std::string(NodeKindName(SubjectKind(e.rel))) +
                      " and object kind " +
                      std::string(NodeKindName(ObjectKind(e.rel))));
    }
    if (i > 0 && !EdgeKeyLess(edges[i - 1], e)) {
      throw Error(ErrorCode::kDuplicateEdge, EdgeText(e) + " appears twice");
    }
  }
  g.edges_ = std::move(edges);

  for (const auto& [id, interval] : activity_events) {
    const ProvNode* n = g.find(id);
    if (n == nullptr || n->kind != NodeKind::kActivity) {
      throw Error(ErrorCode::kInvalidAnnotation,
                  "start/end events given for '" + id.str() +
                      "', which is not a declared activity");
    }
    if (interval.start && interval.end && *interval.end < *interval.start) {
      throw Error(ErrorCode::kInvalidAnnotation,
                  "activity '" + id.str() + "' ends before it starts");
    }
  }
  std::erase_if(activity_events, [](const auto& entry) {
    return !entry.second.start && !entry.second.end;
  });
  g.activity_events_ = std::move(activity_events);

  g.out_.resize(g.nodes_.size());
  g.in_.resize(g.nodes_.size());
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    g.out_[*g.index_of(g.edges_[i].subject)].push_back(i);
    g.in_[*g.index_of(g.edges_[i].object)].push_back(i);
  }
  return g;
}

std::optional<std::size_t> ProvGraph::index_of(const NodeId& id) const {
  auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), id,
      [](const ProvNode& n, const NodeId& key) { return n.id < key; });
  if (it == nodes_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

const ProvNode* ProvGraph::find(const NodeId& id) const {
  auto idx = index_of(id);
  return idx ? &nodes_[*idx] : nullptr;
}

const ProvNode& ProvGraph::node(const NodeId& id) const {
  const ProvNode* n = find(id);
  if (n == nullptr) {
    throw Error(ErrorCode::kUnknownNode, "no node '" + id.str() + "'");
  }
  return *n;
}

const ProvEdge* ProvGraph::find_edge(const NodeId& subject,
                                     const NodeId& object, RelKind rel) const {
  const ProvEdge key{subject, object, rel, std::nullopt};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key, EdgeKeyLess);
  if (it == edges_.end() || EdgeKeyLess(key, *it)) return nullptr;
  return &*it;
}

ActivityInterval ProvGraph::interval(const NodeId& activity) const {
  auto it = activity_events_.find(activity);
  return it == activity_events_.end() ? ActivityInterval{} : it->second;
}

NodeSet ProvGraph::node_ids() const {
  NodeSet ids;
  for (const ProvNode& n : nodes_) ids.insert(ids.end(), n.id);
  return ids;
}

NodeSet ReachableFromAny(const ProvGraph& g, const NodeSet& from,
                         bool forward) {
  std::vector<bool> seen(g.node_count(), false);
  std::deque<std::size_t> queue;
  auto push_neighbours = [&](std::size_t idx) {
    const auto edge_ids = forward ? g.out_edges(idx) : g.in_edges(idx);
    for (std::size_t e : edge_ids) {
      const ProvEdge& edge = g.edges()[e];
      const std::size_t next =
          *g.index_of(forward ? edge.object : edge.subject);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  };
  for (const NodeId& id : from) {
    auto idx = g.index_of(id);
    if (!idx) throw Error(ErrorCode::kUnknownNode, "no node '" + id.str() + "'");
    push_neighbours(*idx);
  }
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    push_neighbours(idx);
  }
  NodeSet out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.insert(out.end(), g.nodes()[i].id);
  }
  return out;
}

NodeSet ReachableFrom(const ProvGraph& g, const NodeId& start) {
  NodeSet out = ReachableFromAny(g, NodeSet{start}, /*forward=*/true);
  out.erase(start);
  return out;
}

NodeSet ReachingTo(const ProvGraph& g, const NodeId& start) {
  NodeSet out = ReachableFromAny(g, NodeSet{start}, /*forward=*/false);
  out.erase(start);
  return out;
}

bool IsAcyclic(const ProvGraph& g) {
  // Kahn's algorithm.
  std::vector<std::size_t> indegree(g.node_count(), 0);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    indegree[i] = g.in_edges(i).size();
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < indegree.size(); ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::size_t idx = ready.back();
    ready.pop_back();
    ++visited;
    for (std::size_t e : g.out_edges(idx)) {
      const std::size_t next = *g.index_of(g.edges()[e].object);
      if (--indegree[next] == 0) ready.push_back(next);
    }
  }
  return visited == g.node_count();
}

}  // namespace provgroup
