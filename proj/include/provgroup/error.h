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

#ifndef PROVGROUP_ERROR_H_
#define PROVGROUP_ERROR_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace provgroup {

enum class ErrorCode {
  // Graph construction.
  kDuplicateNodeId,
  kDanglingEdgeEndpoint,
  kEdgeTypeViolation,
  kDuplicateEdge,
  kInvalidAnnotation,
  kUnknownNode,
  // Grouping.
  kEmptyTargets,
  kTypeViolationAtBoundary,
  kFreshIdCollision,
  kNoSuchUsage,
  kNotAbstract,
  kNotEntity,
  // Policy language and evaluation.
  kSyntaxError,
  kUnknownList,
  kUnknownConstant,
  kUnknownVariable,
  kUnknownAnchorNode,
  kZeroDenominator,
  // PROV-N input.
  kUnknownStatement,
  kRedeclaredId,
  // Service.
  kPreconditionViolation,
  kNoPolicyLoaded,
  kNoAbstraction,
  kUnknownSession,
};

std::string_view ErrorCodeName(ErrorCode code);

// 1-based line and column into some source text.
struct SourcePosition {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePosition&, const SourcePosition&) = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<SourcePosition> position = std::nullopt);

  ErrorCode code() const { return code_; }
  const std::optional<SourcePosition>& position() const { return position_; }
  // The message without the code prefix or position suffix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<SourcePosition> position_;
};

}  // namespace provgroup

#endif  // PROVGROUP_ERROR_H_
