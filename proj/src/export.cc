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
#include <cstdio>

#include "provgroup/error.h"
#include "provgroup/json_export.h"
#include "provgroup/provn_io.h"

namespace provgroup {
namespace {

std::string DotQuote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Single-hue ramp: pale for low sensitivity, saturated red for the maximum.
std::string SensitivityColour(double value, double max) {
  const double ratio = max > 0 ? std::clamp(value / max, 0.0, 1.0) : 1.0;
  const int other = static_cast<int>(230.0 - 180.0 * ratio);
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#ff%02x%02x", other, other);
  return buf;
}

}  // namespace

std::string ExportDot(const ProvGraph& g, const SensitivityMap* sensitivities) {
  double max = 0.0;
  if (sensitivities != nullptr) {
    for (const auto& [id, s] : *sensitivities) max = std::max(max, s);
  }
  std::string out = "digraph provenance {\n  rankdir=RL;\n";
  for (const ProvNode& n : g.nodes()) {
    std::vector<std::string> attrs;
    attrs.push_back(n.kind == NodeKind::kEntity ? "shape=ellipse"
                                                : "shape=box");
    attrs.push_back("label=" + DotQuote(n.id.str()));
    if (n.is_abstract()) attrs.push_back("peripheries=2");
    if (sensitivities != nullptr) {
      if (auto it = sensitivities->find(n.id); it != sensitivities->end()) {
        attrs.push_back("xlabel=" + DotQuote("s=" + FormatNumber(it->second)));
        attrs.push_back("style=filled");
        attrs.push_back("fillcolor=" +
                        DotQuote(SensitivityColour(it->second, max)));
      }
    }
    out += "  " + DotQuote(n.id.str()) + " [";
    for (std::size_t i = 0; i < attrs.size(); ++i) {
      if (i > 0) out += ", ";
      out += attrs[i];
    }
    out += "];\n";
  }
  for (const ProvEdge& e : g.edges()) {
    out += "  " + DotQuote(e.subject.str()) + " -> " +
           DotQuote(e.object.str()) + " [label=" +
           DotQuote(RelKindName(e.rel)) + "];\n";
  }
  out += "}\n";
  return out;
}

nlohmann::json NodeSetToJson(const NodeSet& ids) {
  nlohmann::json out = nlohmann::json::array();
  for (const NodeId& id : ids) out.push_back(id.str());
  return out;
}

nlohmann::json GraphToJson(const ProvGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const ProvNode& n : g.nodes()) {
    nlohmann::json node;
    node["id"] = n.id.str();
    node["kind"] = NodeKindName(n.kind);
    nlohmann::json properties = nlohmann::json::object();
    for (const auto& [key, value] : n.properties) {
      std::visit([&](const auto& v) { properties[key] = v; }, value);
    }
    node["properties"] = std::move(properties);
    if (n.sensitivity) node["sensitivity"] = *n.sensitivity;
    if (n.utility) node["utility"] = *n.utility;
    if (n.source) node["source"] = NodeSetToJson(*n.source);
    if (n.kind == NodeKind::kActivity) {
      const ActivityInterval iv = g.interval(n.id);
      if (iv.start) node["startTime"] = iv.start->ToIso8601();
      if (iv.end) node["endTime"] = iv.end->ToIso8601();
    }
    nodes.push_back(std::move(node));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const ProvEdge& e : g.edges()) {
    nlohmann::json edge;
    edge["subject"] = e.subject.str();
    edge["object"] = e.object.str();
    edge["rel"] = RelKindName(e.rel);
    if (e.time) edge["time"] = e.time->ToIso8601();
    edges.push_back(std::move(edge));
  }
  return nlohmann::json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

nlohmann::json SourceMapToJson(const std::map<NodeId, NodeSet>& source_map) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [id, source] : source_map) {
    out[id.str()] = NodeSetToJson(source);
  }
  return out;
}

nlohmann::json SensitivitiesToJson(const SensitivityMap& sensitivities) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [id, s] : sensitivities) out[id.str()] = s;
  return out;
}

nlohmann::json AbstractEventsToJson(const ProvGraph& input,
                                    const AbstractionReport& report) {
  auto time_json = [](const std::optional<EventTime>& t) {
    return t ? nlohmann::json(t->ToIso8601()) : nlohmann::json(nullptr);
  };
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [id, source] : report.source_map) {
    const ProvNode& n = report.graph.node(id);
    if (n.kind != NodeKind::kEntity) continue;
    nlohmann::json usage = nlohmann::json::object();
    const std::size_t idx = *report.graph.index_of(id);
    for (std::size_t e : report.graph.in_edges(idx)) {
      const ProvEdge& edge = report.graph.edges()[e];
      if (edge.rel != RelKind::kUsed) continue;
      usage[edge.subject.str()] =
          time_json(AbstractUsageEvent(input, report, id, edge.subject));
    }
    out[id.str()] = {
        {"generation", time_json(AbstractGenerationEvent(input, report, id))},
        {"usage", std::move(usage)}};
  }
  return out;
}

std::string ExportJson(const ProvGraph& g) { return GraphToJson(g).dump(2); }

}  // namespace provgroup
