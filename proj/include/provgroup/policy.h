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

// Sensitivity policies.
//
//   list classifications [Unclassified, Classified, Protected, Secret];
//   for all (act used data)
//     where (data.Status >= Secret in classifications (def true))
//     setSensitivity(act, 7);
//   for all (process used data)
//     where (data descendantOf d14) setSensitivity(data, 10);
//
// Each rule matches its pattern against every edge of the named relation,
// binding the left variable to the edge subject and the right one to the
// object. Rules run in order and a later assignment to the same node
// overwrites an earlier one.

#ifndef PROVGROUP_POLICY_H_
#define PROVGROUP_POLICY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "provgroup/abstraction.h"
#include "provgroup/error.h"
#include "provgroup/prov_model.h"

namespace provgroup {

struct ClassificationList {
  std::string name;
  std::vector<std::string> constants;  // ordered, lowest first
};

// var.property >= constant in list (def default)
struct PropertyAtLeast {
  std::string var;
  std::string property;
  std::string constant;
  std::string list;
  bool default_value = false;
};

// var descendantOf anchor
struct DescendantOf {
  std::string var;
  NodeId anchor;
};

struct AlwaysTrue {};

using Condition = std::variant<PropertyAtLeast, DescendantOf, AlwaysTrue>;

struct Rule {
  std::string left_var;
  RelKind rel = RelKind::kUsed;
  std::string right_var;
  Condition condition;
  std::string target_var;
  double sensitivity = 0.0;
  SourcePosition position;
};

struct Policy {
  std::vector<ClassificationList> lists;
  std::vector<Rule> rules;
  // Tolerated irregularities, e.g. a surplus ')' closing a where clause.
  std::vector<std::string> warnings;

  const ClassificationList* find_list(std::string_view name) const;
};

// Throws Error with kSyntaxError, kUnknownList, kUnknownConstant or
// kUnknownVariable, carrying the offending line and column.
Policy ParsePolicy(std::string_view text);

using SensitivityMap = std::map<NodeId, double>;

// Runs the rules in order. Throws kUnknownAnchorNode when a descendantOf
// anchor is not a node of `g`.
SensitivityMap EvaluatePolicy(const ProvGraph& g, const Policy& policy);

// Nodes whose sensitivity is at least `clearance`.
NodeSet GroupingSet(const SensitivityMap& sensitivities, double clearance);

// Sum of utility over `retained` divided by the sum over `intended`. Nodes
// missing from `utilities` count as 0. Throws kPreconditionViolation unless
// retained is a subset of intended, and kZeroDenominator when the intended
// nodes carry no utility.
double ResidualUtility(const std::map<NodeId, double>& utilities,
                       const NodeSet& intended, const NodeSet& retained);

// Utility per node: ProvNode::utility when set, else a numeric property named
// "utility" (any prefix), else absent.
std::map<NodeId, double> CollectUtilities(const ProvGraph& g);

// `g` with policy sensitivities written into ProvNode::sensitivity.
ProvGraph AnnotateSensitivities(const ProvGraph& g,
                                const SensitivityMap& sensitivities);

struct PolicyOutcome {
  SensitivityMap sensitivities;
  NodeSet grouping_set;
  AbstractionReport report;
  // Nullopt when the nodes meant to be retained carry no utility.
  std::optional<double> residual_utility;
};

struct ApplyOptions {
  double clearance = 0.0;
  NodeKind kind = NodeKind::kEntity;
  bool propagate_generators = false;
  // Id for the abstract node; a fresh "abs" id when unset.
  std::optional<NodeId> replacement_id;
};

// Evaluate, select the nodes at or above the clearance, group them into one
// abstract node and measure the residual utility. With nothing selected the
// graph comes back unchanged (annotated) with residual utility 1.
PolicyOutcome ApplyPolicy(const ProvGraph& g, const Policy& policy,
                          const ApplyOptions& options);

}  // namespace provgroup

#endif  // PROVGROUP_POLICY_H_
