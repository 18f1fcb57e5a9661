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

// PROV-N subset reader and writer, plus DOT and JSON exports.
//
// Accepted statements, inside `document ... endDocument`:
//
//   entity(id [, [attr=value, ...]])
//   activity(id [, start, end] [, [attr=value, ...]])
//   used([relId;] activity, entity [, time | -] [, [attrs]])
//   wasGeneratedBy([relId;] entity, activity [, time | -] [, [attrs]])
//
// plus `prefix` and `default` namespace declarations, which are accepted and
// ignored. Relation ids and relation attributes are accepted and dropped.
// Three attributes are reserved for abstraction bookkeeping and map onto node
// fields instead of properties:
//
//   provabs:source="id1 id2 ..."   provabs:sensitivity=7   provabs:utility=1

#ifndef PROVGROUP_PROVN_IO_H_
#define PROVGROUP_PROVN_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "provgroup/policy.h"
#include "provgroup/prov_model.h"

namespace provgroup {

inline constexpr std::string_view kSourceAttribute = "provabs:source";
inline constexpr std::string_view kSensitivityAttribute = "provabs:sensitivity";
inline constexpr std::string_view kUtilityAttribute = "provabs:utility";

struct StatementSpan {
  std::string keyword;  // "entity", "used", ...
  SourcePosition position;
  std::size_t offset = 0;
  std::size_t length = 0;
};

struct ProvNDocument {
  std::string text;
  ProvGraph graph;
  std::vector<StatementSpan> statements;
};

// Throws Error with kSyntaxError, kUnknownStatement (for example `agent`) or
// kRedeclaredId, each with a position; graph construction errors propagate.
ProvNDocument ParseProvNDocument(std::string text,
                                 BuildMode mode = BuildMode::kStrict);
ProvGraph ParseProvN(std::string_view text);

// Deterministic: nodes sorted by id, then edges sorted by
// (subject, object, relation).
std::string SerializeProvN(const ProvGraph& g);

// GraphViz rendering: entities as ellipses, activities as boxes, abstract
// nodes drawn with a double outline. Nodes present in `sensitivities` get a
// coloured "s=<value>" label.
std::string ExportDot(const ProvGraph& g,
                      const SensitivityMap* sensitivities = nullptr);

// {"nodes": [{id, kind, properties, sensitivity?, utility?, source?,
//   startTime?, endTime?}], "edges": [{subject, object, rel, time?}]}
std::string ExportJson(const ProvGraph& g);

// Shortest text that reads back as the same double.
std::string FormatNumber(double value);

}  // namespace provgroup

#endif  // PROVGROUP_PROVN_IO_H_
