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

#ifndef PROVGROUP_VALIDATOR_H_
#define PROVGROUP_VALIDATOR_H_

#include <string>
#include <string_view>
#include <vector>

#include "provgroup/prov_model.h"

namespace provgroup {

enum class Constraint {
  kTyping,
  kDisjointness,
  kGenGenOrdering,     // all generations of one entity are simultaneous
  kGenPrecedesUse,     // an entity is generated before any use of it
  kUseWithinActivity,  // start(a) <= use <= end(a)
  kGenWithinActivity,  // start(a) <= generation <= end(a)
  kGenUseCycle,
};

std::string_view ConstraintName(Constraint c);

struct Violation {
  Constraint constraint;
  std::vector<NodeId> subjects;  // never empty
  std::string message;
};

// Temporal ordering checks. A check involving an event that is not annotated
// holds vacuously.
std::vector<Violation> CheckTemporal(const ProvGraph& g);

// Edge typing and entity/activity disjointness. Graphs built in strict mode
// always pass; this re-checks graphs loaded with kAllowTypeViolations.
std::vector<Violation> CheckStructure(const ProvGraph& g);

// CheckStructure followed by CheckTemporal. Cycles are legal and are not
// reported here.
std::vector<Violation> Validate(const ProvGraph& g);

using Cycle = std::vector<NodeId>;

// Every elementary directed cycle, each reported once and rotated to start at
// its least id. The list is sorted.
std::vector<Cycle> FindGenUseCycles(const ProvGraph& g);

}  // namespace provgroup

#endif  // PROVGROUP_VALIDATOR_H_
