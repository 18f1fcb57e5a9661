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

#include "tests/testing/policy_fixtures.h"

#include <string>

namespace provgroup_testing {

using provgroup::Activity;
using provgroup::Entity;
using provgroup::GenBy;
using provgroup::ProvGraph;
using provgroup::Used;

ProvGraph LineageGraph() {
  return ProvGraph::Build(
      {Entity("d1"), Entity("d10"), Entity("d11"), Entity("d14"),
       Entity("d20"), Activity("p1"), Activity("p2"), Activity("p3"),
       Activity("p4")},
      {GenBy("d14", "p2"), Used("p2", "d10"), Used("p2", "d11"),
       GenBy("d10", "p1"), Used("p1", "d1"), Used("p3", "d20"),
       Used("p4", "d14")});
}

ProvGraph ClassifiedGraph() {
  return ProvGraph::Build(
      {Entity("d1", {{"ex:Status", std::string("Secret")}}),
       Entity("d2", {{"ex:Status", std::string("Classified")}}), Entity("d3"),
       Activity("a1"), Activity("a2"), Activity("a3")},
      {Used("a1", "d1"), Used("a2", "d2"), Used("a3", "d3")});
}

}  // namespace provgroup_testing
