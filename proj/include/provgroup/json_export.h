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

#ifndef PROVGROUP_JSON_EXPORT_H_
#define PROVGROUP_JSON_EXPORT_H_

#include <map>

#include "json.hpp"
#include "provgroup/abstraction.h"
#include "provgroup/policy.h"
#include "provgroup/prov_model.h"

namespace provgroup {

nlohmann::json GraphToJson(const ProvGraph& g);
nlohmann::json NodeSetToJson(const NodeSet& ids);
nlohmann::json SourceMapToJson(const std::map<NodeId, NodeSet>& source_map);
nlohmann::json SensitivitiesToJson(const SensitivityMap& sensitivities);

// Per abstract entity of the report: {"generation": time|null,
// "usage": {activity: time|null}}.
nlohmann::json AbstractEventsToJson(const ProvGraph& input,
                                    const AbstractionReport& report);

}  // namespace provgroup

#endif  // PROVGROUP_JSON_EXPORT_H_
