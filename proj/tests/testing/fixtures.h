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

#ifndef PROVGROUP_TESTS_TESTING_FIXTURES_H_
#define PROVGROUP_TESTS_TESTING_FIXTURES_H_

#include <initializer_list>
#include <string>
#include <string_view>

#include "provgroup/prov_model.h"

namespace provgroup_testing {

// Two-step workflow: a1 uses e1, e2 and generates e3, e4; a3 uses e3 and
// generates e5, e6.
provgroup::ProvGraph WorkflowGraph();

// The same workflow as a PROV-N document.
std::string WorkflowProvN();

// Classification policy with a property rule (sensitivity 7) and a
// descendant rule anchored at d14 (sensitivity 10). The second rule carries
// a surplus ')' that the parser tolerates.
inline constexpr std::string_view kClassificationPolicy =
    "list classifications [Unclassified, Classified, Protected, Secret];\n"
    "for all (act used data)\n"
    "  where (data.Status >= Secret in classifications (def true)) "
    "setSensitivity(act, 7);\n"
    "for all (process used data)\n"
    "  where (data descendantOf d14)) setSensitivity(data, 10);\n";

provgroup::NodeSet Ids(std::initializer_list<const char*> ids);

}  // namespace provgroup_testing

#endif  // PROVGROUP_TESTS_TESTING_FIXTURES_H_
