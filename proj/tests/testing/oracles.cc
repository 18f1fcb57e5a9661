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

#include "tests/testing/oracles.h"

#include <algorithm>
#include <functional>
#include <variant>

#include "provgroup/provn_io.h"

namespace provgroup_testing {

using provgroup::ActivityInterval;
using provgroup::NodeId;
using provgroup::NodeKind;
using provgroup::NodeSet;
using provgroup::Policy;
using provgroup::ProvEdge;
using provgroup::ProvGraph;
using provgroup::ProvNode;
using provgroup::RelKind;
using provgroup::SensitivityMap;

namespace {

std::map<NodeId, std::vector<NodeId>> Successors(const ProvGraph& g) {
  std::map<NodeId, std::vector<NodeId>> out;
  for (const ProvNode& n : g.nodes()) out[n.id];
  for (const ProvEdge& e : g.edges()) out[e.subject].push_back(e.object);
  return out;
}

}  // namespace

std::set<EdgeKey> EdgeKeys(const ProvGraph& g) {
  std::set<EdgeKey> out;
  for (const ProvEdge& e : g.edges()) out.insert({e.subject, e.object, e.rel});
  return out;
}

std::vector<std::vector<NodeId>> SimplePathsFrom(const ProvGraph& g,
                                                 const NodeId& start) {
  const auto succ = Successors(g);
  std::vector<std::vector<NodeId>> paths;
  std::vector<NodeId> path{start};
  std::set<NodeId> on_path{start};
  std::function<void(const NodeId&)> walk = [&](const NodeId& v) {
    for (const NodeId& w : succ.at(v)) {
      if (w == start) {
        path.push_back(w);
        paths.push_back(path);
        path.pop_back();
        continue;
      }
      if (on_path.contains(w)) continue;
      path.push_back(w);
      on_path.insert(w);
      paths.push_back(path);
      walk(w);
      on_path.erase(w);
      path.pop_back();
    }
  };
  walk(start);
  return paths;
}

NodeSet OracleReachable(const ProvGraph& g, const NodeId& start) {
  NodeSet out;
  for (const auto& path : SimplePathsFrom(g, start)) out.insert(path.back());
  out.erase(start);
  return out;
}

NodeSet OraclePathClosure(const ProvGraph& g, const NodeSet& targets) {
  NodeSet out = targets;
  for (const ProvNode& w : g.nodes()) {
    bool from_target = false;
    for (const NodeId& t : targets) {
      for (const auto& path : SimplePathsFrom(g, t)) {
        if (path.back() == w.id) from_target = true;
      }
    }
    if (!from_target) continue;
    for (const auto& path : SimplePathsFrom(g, w.id)) {
      if (targets.contains(path.back())) {
        out.insert(w.id);
        break;
      }
    }
  }
  return out;
}

NodeSet OracleExtend(const ProvGraph& g, const NodeSet& targets,
                     NodeKind kind) {
  NodeSet out = targets;
  for (const ProvEdge& e : g.edges()) {
    if (targets.contains(e.subject) && g.node(e.object).kind == kind) {
      out.insert(e.object);
    }
    if (targets.contains(e.object) && g.node(e.subject).kind == kind) {
      out.insert(e.subject);
    }
  }
  return out;
}

NodeSet OracleGroupingSet(const ProvGraph& g, const NodeSet& targets,
                          NodeKind kind) {
  NodeSet current = targets;
  while (true) {
    NodeSet next = OracleExtend(g, OraclePathClosure(g, current), kind);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::set<EdgeKey> OracleReplacedEdges(const ProvGraph& g,
                                      const NodeSet& grouped,
                                      const NodeId& replacement) {
  std::set<EdgeKey> out;
  for (const ProvEdge& e : g.edges()) {
    const bool s_in = grouped.contains(e.subject);
    const bool o_in = grouped.contains(e.object);
    if (s_in && o_in) continue;
    out.insert({s_in ? replacement : e.subject, o_in ? replacement : e.object,
                e.rel});
  }
  return out;
}

std::vector<std::vector<NodeId>> OracleCycles(const ProvGraph& g) {
  std::set<std::vector<NodeId>> cycles;
  for (const ProvNode& n : g.nodes()) {
    for (auto path : SimplePathsFrom(g, n.id)) {
      if (path.size() < 2 || path.back() != n.id) continue;
      path.pop_back();
      std::rotate(path.begin(), std::min_element(path.begin(), path.end()),
                  path.end());
      cycles.insert(path);
    }
  }
  return {cycles.begin(), cycles.end()};
}

bool OracleAcyclic(const ProvGraph& g) {
  // Repeatedly strip nodes without successors among the remaining ones.
  std::set<NodeId> remaining;
  for (const ProvNode& n : g.nodes()) remaining.insert(n.id);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = remaining.begin(); it != remaining.end();) {
      bool has_successor = false;
      for (const ProvEdge& e : g.edges()) {
        if (e.subject == *it && remaining.contains(e.object)) {
          has_successor = true;
        }
      }
      if (!has_successor) {
        it = remaining.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return remaining.empty();
}

bool OracleValid(const ProvGraph& g) {
  for (const ProvEdge& e : g.edges()) {
    const NodeKind s = g.node(e.subject).kind;
    const NodeKind o = g.node(e.object).kind;
    if (e.rel == RelKind::kUsed &&
        (s != NodeKind::kActivity || o != NodeKind::kEntity)) {
      return false;
    }
    if (e.rel == RelKind::kGenBy &&
        (s != NodeKind::kEntity || o != NodeKind::kActivity)) {
      return false;
    }
  }
  for (const ProvEdge& x : g.edges()) {
    if (!x.time) continue;
    const NodeId& activity = x.rel == RelKind::kUsed ? x.subject : x.object;
    const ActivityInterval iv = g.interval(activity);
    if (iv.start && *x.time < *iv.start) return false;
    if (iv.end && *iv.end < *x.time) return false;
    for (const ProvEdge& y : g.edges()) {
      if (!y.time || x.rel != RelKind::kGenBy) continue;
      if (y.rel == RelKind::kGenBy && y.subject == x.subject &&
          *y.time != *x.time) {
        return false;
      }
      if (y.rel == RelKind::kUsed && y.object == x.subject &&
          *y.time < *x.time) {
        return false;
      }
    }
  }
  return true;
}

namespace {

std::optional<std::string> StatusOf(const ProvNode& n, const std::string& key) {
  for (const auto& [k, v] : n.properties) {
    const std::string local = k.substr(k.find(':') == std::string::npos
                                           ? 0
                                           : k.find(':') + 1);
    if (k != key && local != key) continue;
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
  }
  return std::nullopt;
}

bool ConditionHolds(const ProvGraph& g, const Policy& policy,
                    const provgroup::Condition& condition,
                    const std::map<std::string, NodeId>& binding) {
  if (std::holds_alternative<provgroup::AlwaysTrue>(condition)) return true;
  if (const auto* d = std::get_if<provgroup::DescendantOf>(&condition)) {
    // v descends from the anchor when a path leads from the anchor to v.
    return OracleReachable(g, d->anchor).contains(binding.at(d->var));
  }
  const auto& p = std::get<provgroup::PropertyAtLeast>(condition);
  const auto* list = policy.find_list(p.list);
  const auto value = StatusOf(g.node(binding.at(p.var)), p.property);
  if (!value) return p.default_value;
  const auto& c = list->constants;
  const auto have = std::find(c.begin(), c.end(), *value);
  if (have == c.end()) return p.default_value;
  return have - c.begin() >= std::find(c.begin(), c.end(), p.constant) - c.begin();
}

}  // namespace

SensitivityMap OracleEvaluatePolicy(const ProvGraph& g, const Policy& policy) {
  SensitivityMap out;
  for (const auto& rule : policy.rules) {
    for (const ProvNode& x : g.nodes()) {
      for (const ProvNode& y : g.nodes()) {
        if (rule.left_var == rule.right_var && x.id != y.id) continue;
        if (g.find_edge(x.id, y.id, rule.rel) == nullptr) continue;
        const std::map<std::string, NodeId> binding{{rule.left_var, x.id},
                                                     {rule.right_var, y.id}};
        if (ConditionHolds(g, policy, rule.condition, binding)) {
          out[binding.at(rule.target_var)] = rule.sensitivity;
        }
      }
    }
  }
  return out;
}

std::vector<EdgeKey> UnjustifiedEdges(
    const ProvGraph& input, const ProvGraph& output,
    const std::map<NodeId, NodeSet>& source_map) {
  const std::set<EdgeKey> original = EdgeKeys(input);
  auto expand = [&](const NodeId& v) {
    auto it = source_map.find(v);
    return it == source_map.end() ? NodeSet{v} : it->second;
  };
  std::vector<EdgeKey> out;
  for (const EdgeKey& e : EdgeKeys(output)) {
    bool justified = false;
    for (const NodeId& s : expand(e.subject)) {
      for (const NodeId& o : expand(e.object)) {
        if (original.contains({s, o, e.rel})) justified = true;
      }
    }
    if (!justified) out.push_back(e);
  }
  return out;
}

std::string Describe(const ProvGraph& g) { return provgroup::SerializeProvN(g); }

}  // namespace provgroup_testing
