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

#include <charconv>
#include <cmath>

#include "provgroup/provn_io.h"

namespace provgroup {

std::string FormatNumber(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ec == std::errc() ? end : buf);
}

namespace {

std::string Quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

// Integers read back as bare literals; anything else needs an xsd type.
std::string NumberLiteral(double value) {
  if (std::isfinite(value) && value == std::trunc(value) &&
      std::fabs(value) < 1e15) {
    return FormatNumber(value);
  }
  return Quote(FormatNumber(value)) + " %% xsd:double";
}

std::string Attributes(const ProvNode& n) {
  std::vector<std::string> parts;
  for (const auto& [key, value] : n.properties) {
    if (const auto* text = std::get_if<std::string>(&value)) {
      parts.push_back(key + "=" + Quote(*text));
    } else {
      parts.push_back(key + "=" + NumberLiteral(std::get<double>(value)));
    }
  }
  if (n.sensitivity) {
    parts.push_back(std::string(kSensitivityAttribute) + "=" +
                    NumberLiteral(*n.sensitivity));
  }
  if (n.source) {
    std::string ids;
    for (const NodeId& id : *n.source) {
      if (!ids.empty()) ids += ' ';
      ids += id.str();
    }
    parts.push_back(std::string(kSourceAttribute) + "=" + Quote(ids));
  }
  if (n.utility) {
    parts.push_back(std::string(kUtilityAttribute) + "=" +
                    NumberLiteral(*n.utility));
  }
  if (parts.empty()) return "";
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    out += parts[i];
  }
  return out + "]";
}

std::string TimeOrDash(const std::optional<EventTime>& t) {
  return t ? t->ToIso8601() : "-";
}

}  // namespace

std::string SerializeProvN(const ProvGraph& g) {
  std::string out = "document\n";
  for (const ProvNode& n : g.nodes()) {
    std::vector<std::string> args{n.id.str()};
    if (n.kind == NodeKind::kActivity) {
      const ActivityInterval iv = g.interval(n.id);
      if (iv.start || iv.end) {
        args.push_back(TimeOrDash(iv.start));
        args.push_back(TimeOrDash(iv.end));
      }
    }
    if (std::string attrs = Attributes(n); !attrs.empty()) {
      args.push_back(std::move(attrs));
    }
    out += "  ";
    out += NodeKindName(n.kind);
    out += "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i > 0) out += ", ";
      out += args[i];
    }
    out += ")\n";
  }
  for (const ProvEdge& e : g.edges()) {
    out += "  ";
    out += RelKindName(e.rel);
    out += "(" + e.subject.str() + ", " + e.object.str();
    if (e.time) out += ", " + e.time->ToIso8601();
    out += ")\n";
  }
  out += "endDocument\n";
  return out;
}

}  // namespace provgroup
