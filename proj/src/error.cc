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

#include "provgroup/error.h"

namespace provgroup {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateNodeId: return "DuplicateNodeId";
    case ErrorCode::kDanglingEdgeEndpoint: return "DanglingEdgeEndpoint";
    case ErrorCode::kEdgeTypeViolation: return "EdgeTypeViolation";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kInvalidAnnotation: return "InvalidAnnotation";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kEmptyTargets: return "EmptyTargets";
    case ErrorCode::kTypeViolationAtBoundary: return "TypeViolationAtBoundary";
    case ErrorCode::kFreshIdCollision: return "FreshIdCollision";
    case ErrorCode::kNoSuchUsage: return "NoSuchUsage";
    case ErrorCode::kNotAbstract: return "NotAbstract";
    case ErrorCode::kNotEntity: return "NotEntity";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownList: return "UnknownList";
    case ErrorCode::kUnknownConstant: return "UnknownConstant";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kUnknownAnchorNode: return "UnknownAnchorNode";
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kUnknownStatement: return "UnknownStatement";
    case ErrorCode::kRedeclaredId: return "RedeclaredId";
    case ErrorCode::kPreconditionViolation: return "PreconditionViolation";
    case ErrorCode::kNoPolicyLoaded: return "NoPolicyLoaded";
    case ErrorCode::kNoAbstraction: return "NoAbstraction";
    case ErrorCode::kUnknownSession: return "UnknownSession";
  }
  return "Unknown";
}

namespace {

std::string Format(ErrorCode code, const std::string& message,
                   const std::optional<SourcePosition>& position) {
  std::string out(ErrorCodeName(code));
  out += ": ";
  out += message;
  if (position) {
    out += " (line " + std::to_string(position->line) + ", column " +
           std::to_string(position->column) + ")";
  }
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<SourcePosition> position)
    : std::runtime_error(Format(code, message, position)),
      code_(code),
      detail_(message),
      position_(position) {}

}  // namespace provgroup
