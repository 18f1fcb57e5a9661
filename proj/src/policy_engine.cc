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

#include <algorithm>
#include <array>

#include "provgroup/policy.h"

namespace provgroup {
namespace {

std::string_view LocalName(std::string_view key) {
  const auto colon = key.rfind(':');
  return colon == std::string_view::npos ? key : key.substr(colon + 1);
}

// Exact key first, then any key whose local part (after the prefix) matches.
const PropertyValue* LookupProperty(const ProvNode& node,
                                    std::string_view name) {
  if (auto it = node.properties.find(std::string(name));
      it != node.properties.end()) {
    return &it->second;
  }
  for (const auto& [key, value] : node.properties) {
    if (LocalName(key) == name) return &value;
  }
  return nullptr;
}

bool Holds(const PropertyAtLeast& cond, const ProvNode& node,
           const Policy& policy) {
  const ClassificationList& list = *policy.find_list(cond.list);
  const PropertyValue* value = LookupProperty(node, cond.property);
  const auto* text = value ? std::get_if<std::string>(value) : nullptr;
  if (text == nullptr) return cond.default_value;
  const auto& constants = list.constants;
  const auto actual = std::find(constants.begin(), constants.end(), *text);
  if (actual == constants.end()) return cond.default_value;
  const auto threshold =
      std::find(constants.begin(), constants.end(), cond.constant);
  return actual >= threshold;
}

}  // namespace

SensitivityMap EvaluatePolicy(const ProvGraph& g, const Policy& policy) {
  // Anchors are resolved up front so a bad rule fails even when nothing
  // matches its pattern.
  std::map<NodeId, NodeSet> descendants;
  for (const Rule& rule : policy.rules) {
    if (const auto* d = std::get_if<DescendantOf>(&rule.condition)) {
      if (!g.contains(d->anchor)) {
        throw Error(ErrorCode::kUnknownAnchorNode,
                    "descendantOf refers to '" + d->anchor.str() +
                        "', which is not in the graph",
                    rule.position);
      }
      if (!descendants.contains(d->anchor)) {
        descendants.emplace(d->anchor, ReachableFrom(g, d->anchor));
      }
    }
  }

  SensitivityMap out;
  for (const Rule& rule : policy.rules) {
    for (const ProvEdge& edge : g.edges()) {
      if (edge.rel != rule.rel) continue;
      if (rule.left_var == rule.right_var && edge.subject != edge.object) {
        continue;
      }
      auto bound = [&](const std::string& var) -> const NodeId& {
        return var == rule.left_var ? edge.subject : edge.object;
      };
      const bool matched = std::visit(
          [&](const auto& cond) {
            using T = std::decay_t<decltype(cond)>;
            if constexpr (std::is_same_v<T, AlwaysTrue>) {
              return true;
            } else if constexpr (std::is_same_v<T, DescendantOf>) {
              return descendants.at(cond.anchor).contains(bound(cond.var));
            } else {
              return Holds(cond, g.node(bound(cond.var)), policy);
            }
          },
          rule.condition);
      if (matched) out[bound(rule.target_var)] = rule.sensitivity;
    }
  }
  return out;
}

NodeSet GroupingSet(const SensitivityMap& sensitivities, double clearance) {
  NodeSet out;
  for (const auto& [id, s] : sensitivities) {
    if (s >= clearance) out.insert(out.end(), id);
  }
  return out;
}

double ResidualUtility(const std::map<NodeId, double>& utilities,
                       const NodeSet& intended, const NodeSet& retained) {
  if (!std::includes(intended.begin(), intended.end(), retained.begin(),
                     retained.end())) {
    throw Error(ErrorCode::kPreconditionViolation,
                "retained nodes must be a subset of the intended ones");
  }
  auto total = [&](const NodeSet& ids) {
    double sum = 0.0;
    for (const NodeId& id : ids) {
      if (auto it = utilities.find(id); it != utilities.end()) {
        sum += it->second;
      }
    }
    return sum;
  };
  const double denominator = total(intended);
  if (denominator <= 0.0) {
    throw Error(ErrorCode::kZeroDenominator,
                "no utility among the nodes meant to be retained");
  }
  return total(retained) / denominator;
}

std::map<NodeId, double> CollectUtilities(const ProvGraph& g) {
  std::map<NodeId, double> out;
  for (const ProvNode& n : g.nodes()) {
    if (n.utility) {
      out.emplace(n.id, *n.utility);
    } else if (const PropertyValue* v = LookupProperty(n, "utility")) {
      if (const double* number = std::get_if<double>(v); number && *number >= 0) {
        out.emplace(n.id, *number);
      }
    }
  }
  return out;
}

ProvGraph AnnotateSensitivities(const ProvGraph& g,
                                const SensitivityMap& sensitivities) {
  std::vector<ProvNode> nodes(g.nodes().begin(), g.nodes().end());
  for (ProvNode& n : nodes) {
    if (auto it = sensitivities.find(n.id); it != sensitivities.end()) {
      n.sensitivity = it->second;
    }
  }
  return ProvGraph::Build(
      std::move(nodes), std::vector<ProvEdge>(g.edges().begin(), g.edges().end()),
      g.activity_events(), BuildMode::kAllowTypeViolations);
}

PolicyOutcome ApplyPolicy(const ProvGraph& g, const Policy& policy,
                          const ApplyOptions& options) {
  PolicyOutcome out;
  out.sensitivities = EvaluatePolicy(g, policy);
  ProvGraph annotated = AnnotateSensitivities(g, out.sensitivities);
  out.grouping_set = GroupingSet(out.sensitivities, options.clearance);
  if (out.grouping_set.empty()) {
    out.report.graph = std::move(annotated);
    out.residual_utility = 1.0;
    return out;
  }

  const NodeId abstract_id = options.replacement_id.value_or(
      FreshId(std::array<const ProvGraph*, 1>{&g}, "abs"));
  out.report = Group(annotated,
                     GroupRequest{out.grouping_set, abstract_id, options.kind},
                     GroupOptions{options.propagate_generators});

  const NodeSet all = g.node_ids();
  NodeSet intended;
  std::set_difference(all.begin(), all.end(),
                      out.grouping_set.begin(), out.grouping_set.end(),
                      std::inserter(intended, intended.end()));
  NodeSet retained;
  for (const NodeId& id : intended) {
    if (out.report.graph.contains(id)) retained.insert(retained.end(), id);
  }
  try {
    out.residual_utility =
        ResidualUtility(CollectUtilities(g), intended, retained);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kZeroDenominator) throw;
    out.residual_utility = std::nullopt;
  }
  return out;
}

}  // namespace provgroup
