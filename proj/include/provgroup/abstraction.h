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

// Abstraction by grouping: a set of nodes is replaced by one abstract node of
// a chosen kind. The grouped set is first closed under paths (so no path can
// leave the set and come back, which would turn into a cycle through the new
// node) and extended with adjacent nodes of the replacement's kind (so every
// rewired edge stays well-typed). Rewired edges always correspond to an edge
// of the input graph.

#ifndef PROVGROUP_ABSTRACTION_H_
#define PROVGROUP_ABSTRACTION_H_

#include <map>
#include <optional>
#include <span>
#include <string_view>

#include "provgroup/prov_model.h"

namespace provgroup {

// Property marking a node created by grouping.
inline constexpr std::string_view kAbstractTypeKey = "prov:type";
inline constexpr std::string_view kAbstractTypeValue = "abstract";

struct GroupRequest {
  NodeSet targets;
  NodeId replacement_id;
  NodeKind replacement_kind = NodeKind::kEntity;
};

// Result of one (or one propagated) grouping step. Every NodeId in
// `source_map`, `targets` and `collateral` refers to the input graph of the
// step; the graph's abstract nodes carry the same sets in ProvNode::source.
struct AbstractionReport {
  ProvGraph graph;
  std::map<NodeId, NodeSet> source_map;
  NodeSet targets;
  // Removed nodes that were not requested.
  NodeSet collateral;
  std::size_t replaced_count = 0;
};

// Targets plus every node lying on a directed path between two targets
// (including a path from a target back to itself). Throws kUnknownNode.
NodeSet PathClosure(const ProvGraph& g, const NodeSet& targets);

// Targets plus every node of kind `kind` adjacent to a target in either
// direction. Throws kUnknownNode.
NodeSet Extend(const ProvGraph& g, const NodeSet& targets, NodeKind kind);

// The set Group actually replaces: PathClosure and Extend applied in turn
// until neither adds a node. The result is path-convex and contains every
// `kind` neighbour of its members.
NodeSet GroupingClosure(const ProvGraph& g, const NodeSet& targets,
                        NodeKind kind);

struct ReplaceResult {
  ProvGraph graph;
  NodeSet source;
};

// Replaces `targets` by `replacement`. Boundary edges are rewired to the new
// node with their relation kept and their event annotation dropped; internal
// edges disappear; parallel results merge. The replacement's `source` is set
// to `targets`.
//
// Throws kEmptyTargets, kUnknownNode, kFreshIdCollision, or
// kTypeViolationAtBoundary when a rewired edge would be mistyped.
ReplaceResult Replace(const ProvGraph& g, const NodeSet& targets,
                      ProvNode replacement);

struct GroupOptions {
  // After an entity grouping, also group the activities that generated the
  // new entity so it keeps a single generation.
  bool propagate_generators = false;
  // Id for that abstract activity; derived from the replacement id if unset.
  std::optional<NodeId> generator_id;
};

// Replace(GroupingClosure(targets)). The abstract node gets
// `prov:type="abstract"`, the largest sensitivity among the nodes it
// replaces, and utility 0.
AbstractionReport Group(const ProvGraph& g, const GroupRequest& request,
                        const GroupOptions& options = {});

// For an abstract entity, the latest generation event among the entities it
// replaced, looked up in the step's input graph `input`. Nullopt when no
// replaced entity was generated, or when some generation is not annotated.
std::optional<EventTime> AbstractGenerationEvent(
    const ProvGraph& input, const AbstractionReport& report,
    const NodeId& abstract_node);

// The earliest usage event among the entities the abstract node replaced.
// Requires used(by_activity, abstract_node) in the report graph, else throws
// kNoSuchUsage. Nullopt when no replaced entity was used, or when some
// usage is not annotated.
std::optional<EventTime> AbstractUsageEvent(const ProvGraph& input,
                                            const AbstractionReport& report,
                                            const NodeId& abstract_node,
                                            const NodeId& by_activity);

// When an abstract entity ended up with several generating activities, groups
// those activities into one abstract activity. The returned report is again
// relative to `input`: the new activity's source is expanded through
// `report`. No-op with at most one generator.
//
// Throws kUnknownNode, kNotAbstract, kNotEntity.
AbstractionReport PropagateGenerators(
    const ProvGraph& input, const AbstractionReport& report,
    const NodeId& abstract_node,
    std::optional<NodeId> generator_id = std::nullopt);

// Expands the abstract node of reports.back() through each earlier report
// until only ids of reports.front()'s input graph remain. Consecutive
// reports must be chained (each one's input is the previous graph).
NodeSet FlattenSource(std::span<const AbstractionReport> reports,
                      const NodeId& abstract_node);

// `base` if unused in every given graph, else `base_1`, `base_2`, ...
NodeId FreshId(std::span<const ProvGraph* const> graphs, std::string_view base);

}  // namespace provgroup

#endif  // PROVGROUP_ABSTRACTION_H_
