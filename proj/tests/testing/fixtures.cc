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

#include "tests/testing/fixtures.h"

namespace provgroup_testing {

using provgroup::Activity;
using provgroup::Entity;
using provgroup::GenBy;
using provgroup::NodeId;
using provgroup::NodeSet;
using provgroup::ProvGraph;
using provgroup::Used;

ProvGraph WorkflowGraph() {
  return ProvGraph::Build(
      {Entity("e1"), Entity("e2"), Entity("e3"), Entity("e4"), Entity("e5"),
       Entity("e6"), Activity("a1"), Activity("a3")},
      {Used("a1", "e1"), Used("a1", "e2"), GenBy("e3", "a1"),
       GenBy("e4", "a1"), Used("a3", "e3"), GenBy("e5", "a3"),
       GenBy("e6", "a3")});
}

std::string WorkflowProvN() {
  return R"(document
  entity(e1)
  entity(e2)
  entity(e3)
  entity(e4)
  entity(e5)
  entity(e6)
  activity(a1)
  activity(a3)
  used(a1, e1)
  used(a1, e2)
  wasGeneratedBy(e3, a1)
  wasGeneratedBy(e4, a1)
  used(a3, e3)
  wasGeneratedBy(e5, a3)
  wasGeneratedBy(e6, a3)
endDocument
)";
}

NodeSet Ids(std::initializer_list<const char*> ids) {
  NodeSet out;
  for (const char* id : ids) out.insert(NodeId(id));
  return out;
}

}  // namespace provgroup_testing
