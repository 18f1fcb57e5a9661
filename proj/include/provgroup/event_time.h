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

#ifndef PROVGROUP_EVENT_TIME_H_
#define PROVGROUP_EVENT_TIME_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace provgroup {

// A point on the event timeline, stored exactly as a count of nanoseconds
// since the Unix epoch. Equal values mean simultaneous events. The order is
// total, so every pair of events is comparable.
class EventTime {
 public:
  constexpr EventTime() = default;

  static constexpr EventTime FromNanos(std::int64_t nanos) {
    EventTime t;
    t.nanos_ = nanos;
    return t;
  }
  static constexpr EventTime FromSeconds(std::int64_t seconds) {
    return FromNanos(seconds * 1'000'000'000);
  }

  // Accepts xsd:dateTime, e.g. "2011-11-16T16:05:00", with optional
  // fractional seconds (up to 9 digits) and an optional "Z" or "+hh:mm"
  // zone. Times without a zone are read as UTC. Returns nullopt on malformed
  // input.
  static std::optional<EventTime> ParseIso8601(std::string_view text);

  // UTC rendering, "YYYY-MM-DDThh:mm:ss[.fraction]Z", with trailing zeros of
  // the fraction trimmed. ParseIso8601(ToIso8601()) is the identity.
  std::string ToIso8601() const;

  constexpr std::int64_t nanos() const { return nanos_; }

  friend constexpr auto operator<=>(EventTime, EventTime) = default;

 private:
  std::int64_t nanos_ = 0;
};

}  // namespace provgroup

#endif  // PROVGROUP_EVENT_TIME_H_
