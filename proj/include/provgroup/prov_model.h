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

// Entity/Activity provenance graphs with `used` and `wasGeneratedBy` edges.
//
// Edges are stored in the relation's argument order: used(a, e) is the edge
// a -> e and wasGeneratedBy(e, a) is the edge e -> a. Every edge therefore
// points from an effect back to its cause, and "reachable" means "earlier in
// the derivation history".

#ifndef PROVGROUP_PROV_MODEL_H_
#define PROVGROUP_PROV_MODEL_H_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "provgroup/event_time.h"

namespace provgroup {

class NodeId {
 public:
  NodeId() = default;
  explicit NodeId(std::string value) : value_(std::move(value)) {}
  explicit NodeId(const char* value) : value_(value) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const NodeId&, const NodeId&) = default;

 private:
  std::string value_;
};

using NodeSet = std::set<NodeId>;

enum class NodeKind { kEntity, kActivity };
enum class RelKind { kUsed, kGenBy };

std::string_view NodeKindName(NodeKind kind);  // "entity" / "activity"
std::string_view RelKindName(RelKind rel);     // "used" / "wasGeneratedBy"
std::optional<NodeKind> ParseNodeKind(std::string_view text);

// Kinds of subject and object a relation requires.
constexpr NodeKind SubjectKind(RelKind rel) {
  return rel == RelKind::kUsed ? NodeKind::kActivity : NodeKind::kEntity;
}
constexpr NodeKind ObjectKind(RelKind rel) {
  return rel == RelKind::kUsed ? NodeKind::kEntity : NodeKind::kActivity;
}

// Free-form property value: text or a number.
using PropertyValue = std::variant<std::string, double>;
using PropertyMap = std::map<std::string, PropertyValue>;

struct ProvNode {
  NodeId id;
  NodeKind kind = NodeKind::kEntity;
  PropertyMap properties;
  std::optional<double> sensitivity;
  std::optional<double> utility;
  // Present iff the node is abstract: the ids it replaced.
  std::optional<NodeSet> source;

  bool is_abstract() const { return source.has_value(); }

  friend bool operator==(const ProvNode&, const ProvNode&) = default;
};

ProvNode Entity(std::string id, PropertyMap properties = {});
ProvNode Activity(std::string id, PropertyMap properties = {});

struct ProvEdge {
  NodeId subject;
  NodeId object;
  RelKind rel = RelKind::kUsed;
  // The usage event for Used edges, the generation event for GenBy edges.
  std::optional<EventTime> time;

  friend bool operator==(const ProvEdge&, const ProvEdge&) = default;
};

ProvEdge Used(std::string activity, std::string entity,
              std::optional<EventTime> time = std::nullopt);
ProvEdge GenBy(std::string entity, std::string activity,
               std::optional<EventTime> time = std::nullopt);

// Orders edges by (subject, object, rel), ignoring the event annotation.
bool EdgeKeyLess(const ProvEdge& a, const ProvEdge& b);

struct ActivityInterval {
  std::optional<EventTime> start;
  std::optional<EventTime> end;

  friend bool operator==(const ActivityInterval&,
                         const ActivityInterval&) = default;
};

using ActivityEvents = std::map<NodeId, ActivityInterval>;

enum class BuildMode {
  // Enforce every graph invariant.
  kStrict,
  // Skip the edge typing check so the validator can report typing
  // violations instead of refusing the input outright.
  kAllowTypeViolations,
};

// An immutable provenance graph. Nodes are kept sorted by id and edges by
// (subject, object, rel), so equal graphs compare equal and iterate in the
// same order.
class ProvGraph {
 public:
  ProvGraph() = default;

  // Throws Error with kDuplicateNodeId, kDanglingEdgeEndpoint,
  // kEdgeTypeViolation, kDuplicateEdge or kInvalidAnnotation.
  static ProvGraph Build(std::vector<ProvNode> nodes,
                         std::vector<ProvEdge> edges,
                         ActivityEvents activity_events = {},
                         BuildMode mode = BuildMode::kStrict);

  std::span<const ProvNode> nodes() const { return nodes_; }
  std::span<const ProvEdge> edges() const { return edges_; }
  const ActivityEvents& activity_events() const { return activity_events_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool contains(const NodeId& id) const { return index_of(id).has_value(); }
  const ProvNode* find(const NodeId& id) const;
  // Throws kUnknownNode.
  const ProvNode& node(const NodeId& id) const;
  std::optional<std::size_t> index_of(const NodeId& id) const;

  // Edge indices leaving / entering the node at `node_index`.
  std::span<const std::size_t> out_edges(std::size_t node_index) const {
    return out_[node_index];
  }
  std::span<const std::size_t> in_edges(std::size_t node_index) const {
    return in_[node_index];
  }

  const ProvEdge* find_edge(const NodeId& subject, const NodeId& object,
                            RelKind rel) const;
  ActivityInterval interval(const NodeId& activity) const;

  NodeSet node_ids() const;

  friend bool operator==(const ProvGraph& a, const ProvGraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_ &&
           a.activity_events_ == b.activity_events_;
  }

 private:
  std::vector<ProvNode> nodes_;
  std::vector<ProvEdge> edges_;
  ActivityEvents activity_events_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

// Every node v != start with a directed path start ~> v along stored edge
// direction. Throws kUnknownNode.
NodeSet ReachableFrom(const ProvGraph& g, const NodeId& start);

// Every node v != start with a directed path v ~> start.
NodeSet ReachingTo(const ProvGraph& g, const NodeId& start);

// Nodes reachable by paths of length >= 1 from any node in `from`, following
// edges forward (or backward when `forward` is false). Members of `from` are
// included only when they lie on such a path.
NodeSet ReachableFromAny(const ProvGraph& g, const NodeSet& from,
                         bool forward = true);

bool IsAcyclic(const ProvGraph& g);

}  // namespace provgroup

template <>
struct std::hash<provgroup::NodeId> {
  std::size_t operator()(const provgroup::NodeId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};

#endif  // PROVGROUP_PROV_MODEL_H_
