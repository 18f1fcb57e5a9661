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

#include "tests/testing/random_graphs.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace provgroup_testing {

using provgroup::ActivityEvents;
using provgroup::ActivityInterval;
using provgroup::EventTime;
using provgroup::NodeId;
using provgroup::NodeKind;
using provgroup::NodeSet;
using provgroup::ProvEdge;
using provgroup::ProvGraph;
using provgroup::ProvNode;
using provgroup::RelKind;

namespace {

constexpr std::int64_t kSecond = 1'000'000'000;
// 2023-11-14T22:13:20Z; keeps generated timestamps realistic.
constexpr std::int64_t kEpoch = std::int64_t{1'700'000'000} * kSecond;

bool Chance(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A time in [lo, hi] (nanoseconds after kEpoch), usually on a whole second.
std::int64_t Draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  std::int64_t t = std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  if (Chance(rng, 0.7)) {
    const std::int64_t whole = t - t % kSecond;
    if (whole >= lo) t = whole;
  }
  return t;
}

EventTime At(std::int64_t offset) { return EventTime::FromNanos(kEpoch + offset); }

void AddProperties(std::mt19937_64& rng, ProvNode& n) {
  if (n.kind == NodeKind::kEntity && Chance(rng, 0.5)) {
    n.properties["ex:Status"] = std::string(kLevels[Uniform(rng, 0, 3)]);
  }
  if (Chance(rng, 0.2)) {
    n.properties["ex:label"] =
        std::string(Chance(rng, 0.5) ? "say \"hi\"\tnow" : "plain text");
  }
  if (Chance(rng, 0.2)) n.properties["ex:weight"] = Uniform(rng, -5, 5) / 4.0;
  if (Chance(rng, 0.6)) n.utility = Uniform(rng, 1, 8);
  if (Chance(rng, 0.1)) n.sensitivity = Uniform(rng, 0, 12) / 2.0;
}

}  // namespace

ProvGraph RandomValidGraph(std::mt19937_64& rng, const GraphShape& shape) {
  const int n = Uniform(rng, std::max(shape.min_nodes, 2), shape.max_nodes);
  const int activities = Uniform(rng, 1, n - 1);

  std::vector<ProvNode> nodes;
  std::vector<std::size_t> activity_index, entity_index;
  for (int i = 0; i < n; ++i) {
    const bool is_activity = i < activities;
    ProvNode node = is_activity
                        ? provgroup::Activity("a" + std::to_string(i))
                        : provgroup::Entity("e" + std::to_string(i - activities));
    if (shape.with_properties) AddProperties(rng, node);
    (is_activity ? activity_index : entity_index).push_back(nodes.size());
    nodes.push_back(std::move(node));
  }
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  auto allowed = [&](std::size_t subject, std::size_t object) {
    return !shape.acyclic || rank[subject] > rank[object];
  };

  // Activity intervals as offsets; a missing bound is unconstrained.
  struct Bounds {
    std::optional<std::int64_t> start, end;
  };
  std::vector<Bounds> bounds(n);
  ActivityEvents events;
  for (std::size_t a : activity_index) {
    const std::int64_t start = Draw(rng, 0, 100 * kSecond);
    const std::int64_t end = start + Draw(rng, 0, 60 * kSecond);
    if (Chance(rng, shape.keep_interval_bound_probability)) {
      bounds[a].start = start;
    }
    if (Chance(rng, shape.keep_interval_bound_probability)) bounds[a].end = end;
    if (bounds[a].start || bounds[a].end) {
      events[nodes[a].id] = ActivityInterval{
          bounds[a].start ? std::optional(At(*bounds[a].start)) : std::nullopt,
          bounds[a].end ? std::optional(At(*bounds[a].end)) : std::nullopt};
    }
  }
  auto contains = [&](std::size_t a, std::int64_t t) {
    return (!bounds[a].start || *bounds[a].start <= t) &&
           (!bounds[a].end || t <= *bounds[a].end);
  };
  auto maybe_time = [&](std::int64_t t) -> std::optional<EventTime> {
    if (Chance(rng, shape.keep_event_probability)) return At(t);
    return std::nullopt;
  };

  std::vector<ProvEdge> edges;
  std::vector<std::optional<std::int64_t>> generated_at(n);
  for (std::size_t e : entity_index) {
    if (!Chance(rng, 0.75)) continue;
    const std::int64_t t = Draw(rng, 0, 160 * kSecond);
    std::vector<std::size_t> candidates;
    for (std::size_t a : activity_index) {
      if (contains(a, t) && allowed(e, a)) candidates.push_back(a);
    }
    if (candidates.empty()) continue;
    std::shuffle(candidates.begin(), candidates.end(), rng);
    static constexpr int kGenerators[] = {1, 1, 1, 2, 3};
    const std::size_t k = std::min<std::size_t>(
        candidates.size(), kGenerators[Uniform(rng, 0, 4)]);
    generated_at[e] = t;
    for (std::size_t i = 0; i < k; ++i) {
      edges.push_back(provgroup::GenBy(nodes[e].id.str(),
                                       nodes[candidates[i]].id.str(),
                                       maybe_time(t)));
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> used;
  const int attempts = Uniform(rng, 0, 2 * n);
  for (int i = 0; i < attempts; ++i) {
    const std::size_t a =
        activity_index[Uniform(rng, 0, static_cast<int>(activity_index.size()) - 1)];
    const std::size_t e =
        entity_index[Uniform(rng, 0, static_cast<int>(entity_index.size()) - 1)];
    if (!allowed(a, e) || !used.emplace(a, e).second) continue;
    std::int64_t lo = bounds[a].start.value_or(0);
    if (generated_at[e]) lo = std::max(lo, *generated_at[e]);
    const std::int64_t hi = bounds[a].end.value_or(220 * kSecond);
    std::optional<EventTime> time;
    if (lo <= hi) time = maybe_time(Draw(rng, lo, hi));
    edges.push_back(provgroup::Used(nodes[a].id.str(), nodes[e].id.str(), time));
  }
  return ProvGraph::Build(std::move(nodes), std::move(edges), std::move(events));
}

ProvGraph RandomCorpusGraph(std::mt19937_64& rng, int max_nodes) {
  GraphShape shape;
  shape.max_nodes = max_nodes;
  shape.acyclic = Chance(rng, 0.5);
  return RandomValidGraph(rng, shape);
}

NodeSet RandomTargets(std::mt19937_64& rng, const ProvGraph& g, int max_size) {
  std::vector<NodeId> ids;
  for (const ProvNode& n : g.nodes()) ids.push_back(n.id);
  std::shuffle(ids.begin(), ids.end(), rng);
  const int size =
      Uniform(rng, 1, std::min(max_size, static_cast<int>(ids.size())));
  return NodeSet(ids.begin(), ids.begin() + size);
}

NodeKind RandomKind(std::mt19937_64& rng) {
  return Chance(rng, 0.5) ? NodeKind::kEntity : NodeKind::kActivity;
}

std::string RandomPolicyText(std::mt19937_64& rng, const ProvGraph& g) {
  std::string text = "list classifications [";
  for (int i = 0; i < 4; ++i) {
    if (i > 0) text += ", ";
    text += kLevels[i];
  }
  text += "];\n";
  const int rules = Uniform(rng, 1, 4);
  for (int r = 0; r < rules; ++r) {
    const bool used = Chance(rng, 0.6);
    // The entity variable is `d`, the activity variable is `p`.
    text += used ? "for all (p used d)\n" : "for all (d genBy p)\n";
    text += "  where (";
    switch (Uniform(rng, 0, 2)) {
      case 0:
        text += "true";
        break;
      case 1:
        text += std::string(Chance(rng, 0.5) ? "d" : "p") + ".Status >= " +
                kLevels[Uniform(rng, 0, 3)] + " in classifications (def " +
                (Chance(rng, 0.5) ? "true" : "false") + ")";
        break;
      default: {
        const auto& nodes = g.nodes();
        const auto& anchor =
            nodes[Uniform(rng, 0, static_cast<int>(nodes.size()) - 1)];
        text += std::string(Chance(rng, 0.5) ? "d" : "p") +
                " descendantOf " + anchor.id.str();
      }
    }
    text += ") setSensitivity(" + std::string(Chance(rng, 0.5) ? "d" : "p") +
            ", " + std::to_string(Uniform(rng, 0, 11)) + ");\n";
  }
  return text;
}

}  // namespace provgroup_testing
