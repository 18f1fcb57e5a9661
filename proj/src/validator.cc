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

#include "provgroup/validator.h"

#include <algorithm>
#include <deque>
#include <set>

namespace provgroup {

std::string_view ConstraintName(Constraint c) {
  switch (c) {
    case Constraint::kTyping: return "Typing";
    case Constraint::kDisjointness: return "Disjointness";
    case Constraint::kGenGenOrdering: return "C1_GenGenOrdering";
    case Constraint::kGenPrecedesUse: return "C2_GenPrecedesUse";
    case Constraint::kUseWithinActivity: return "C3_UseWithinActivity";
    case Constraint::kGenWithinActivity: return "C4_GenWithinActivity";
    case Constraint::kGenUseCycle: return "GenUseCycle";
  }
  return "Unknown";
}

namespace {

bool WellTyped(const ProvGraph& g, const ProvEdge& e) {
  return g.node(e.subject).kind == SubjectKind(e.rel) &&
         g.node(e.object).kind == ObjectKind(e.rel);
}

std::string Describe(const ProvEdge& e) {
  std::string out = std::string(RelKindName(e.rel)) + "(" + e.subject.str() +
                    ", " + e.object.str() + ")";
  if (e.time) out += " at " + e.time->ToIso8601();
  return out;
}

// Well-typed, timed edges grouped per entity.
struct EntityEvents {
  std::vector<const ProvEdge*> generations;
  std::vector<const ProvEdge*> usages;
};

}  // namespace

std::vector<Violation> CheckStructure(const ProvGraph& g) {
  std::vector<Violation> out;
  for (std::size_t i = 1; i < g.nodes().size(); ++i) {
    if (g.nodes()[i - 1].id == g.nodes()[i].id) {
      out.push_back({Constraint::kDisjointness,
                     {g.nodes()[i].id},
                     "'" + g.nodes()[i].id.str() +
                         "' is declared both as an entity and an activity"});
    }
  }
  for (const ProvEdge& e : g.edges()) {
    if (!WellTyped(g, e)) {
      out.push_back({Constraint::kTyping,
                     {e.subject, e.object},
                     Describe(e) + " requires subject kind " +
                         std::string(NodeKindName(SubjectKind(e.rel))) +
                         " and object kind " +
                         std::string(NodeKindName(ObjectKind(e.rel)))});
    }
  }
  return out;
}

std::vector<Violation> CheckTemporal(const ProvGraph& g) {
  std::map<NodeId, EntityEvents> per_entity;
  for (const ProvEdge& e : g.edges()) {
    if (!e.time || !WellTyped(g, e)) continue;
    if (e.rel == RelKind::kGenBy) {
      per_entity[e.subject].generations.push_back(&e);
    } else {
      per_entity[e.object].usages.push_back(&e);
    }
  }

  std::vector<Violation> out;
  for (const auto& [entity, events] : per_entity) {
    const auto& gens = events.generations;
    const bool simultaneous =
        std::all_of(gens.begin(), gens.end(), [&](const ProvEdge* e) {
          return *e->time == *gens.front()->time;
        });
    if (!simultaneous) {
      Violation v{Constraint::kGenGenOrdering, {entity}, ""};
      v.message = "generations of '" + entity.str() + "' are not simultaneous:";
      for (const ProvEdge* e : gens) {
        v.subjects.push_back(e->object);
        v.message += " " + Describe(*e);
      }
      out.push_back(std::move(v));
    }
  }
  for (const auto& [entity, events] : per_entity) {
    for (const ProvEdge* gen : events.generations) {
      for (const ProvEdge* use : events.usages) {
        if (*use->time < *gen->time) {
          out.push_back({Constraint::kGenPrecedesUse,
                         {entity, gen->object, use->subject},
                         Describe(*use) + " precedes " + Describe(*gen)});
        }
      }
    }
  }
  auto check_within = [&](const ProvEdge& e, const NodeId& activity,
                          Constraint constraint) {
    const ActivityInterval iv = g.interval(activity);
    if (iv.start && *e.time < *iv.start) {
      out.push_back({constraint,
                     {e.subject, e.object},
                     Describe(e) + " precedes the start of '" +
                         activity.str() + "' at " + iv.start->ToIso8601()});
    }
    if (iv.end && *iv.end < *e.time) {
      out.push_back({constraint,
                     {e.subject, e.object},
                     Describe(e) + " follows the end of '" + activity.str() +
                         "' at " + iv.end->ToIso8601()});
    }
  };
  for (const ProvEdge& e : g.edges()) {
    if (e.time && e.rel == RelKind::kUsed && WellTyped(g, e)) {
      check_within(e, e.subject, Constraint::kUseWithinActivity);
    }
  }
  for (const ProvEdge& e : g.edges()) {
    if (e.time && e.rel == RelKind::kGenBy && WellTyped(g, e)) {
      check_within(e, e.object, Constraint::kGenWithinActivity);
    }
  }
  return out;
}

std::vector<Violation> Validate(const ProvGraph& g) {
  std::vector<Violation> out = CheckStructure(g);
  std::vector<Violation> temporal = CheckTemporal(g);
  out.insert(out.end(), std::make_move_iterator(temporal.begin()),
             std::make_move_iterator(temporal.end()));
  return out;
}

namespace {

// Johnson's elementary circuit enumeration over node indices. Node indices
// follow id order, so the least vertex of every circuit is its start.
class CircuitFinder {
 public:
  explicit CircuitFinder(const ProvGraph& g) : n_(g.node_count()), adj_(n_) {
    for (std::size_t v = 0; v < n_; ++v) {
      std::set<std::size_t> targets;
      for (std::size_t e : g.out_edges(v)) {
        targets.insert(*g.index_of(g.edges()[e].object));
      }
      adj_[v].assign(targets.begin(), targets.end());
    }
  }

  std::vector<std::vector<std::size_t>> Run() {
    for (start_ = 0; start_ < n_; ++start_) {
      component_ = StrongComponentOf(start_);
      if (component_.empty()) continue;
      blocked_.assign(n_, false);
      blocked_by_.assign(n_, {});
      Circuit(start_);
    }
    return std::move(circuits_);
  }

 private:
  // The strongly connected component of `s` in the subgraph induced by
  // vertices >= s, or empty when s lies on no cycle there.
  std::vector<bool> StrongComponentOf(std::size_t s) const {
    auto sweep = [&](bool forward) {
      std::vector<bool> seen(n_, false);
      std::deque<std::size_t> queue{s};
      while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w = s; w < n_; ++w) {
          const bool edge = forward ? HasEdge(v, w) : HasEdge(w, v);
          if (edge && !seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
        }
      }
      return seen;
    };
    const std::vector<bool> fwd = sweep(true);
    if (!fwd[s]) return {};
    const std::vector<bool> bwd = sweep(false);
    std::vector<bool> comp(n_, false);
    for (std::size_t v = s; v < n_; ++v) comp[v] = fwd[v] && bwd[v];
    return comp;
  }

  bool HasEdge(std::size_t v, std::size_t w) const {
    return std::binary_search(adj_[v].begin(), adj_[v].end(), w);
  }

  void Unblock(std::size_t u) {
    blocked_[u] = false;
    std::set<std::size_t> waiting;
    waiting.swap(blocked_by_[u]);
    for (std::size_t w : waiting) {
      if (blocked_[w]) Unblock(w);
    }
  }

  bool Circuit(std::size_t v) {
    bool found = false;
    stack_.push_back(v);
    blocked_[v] = true;
    for (std::size_t w : adj_[v]) {
      if (w < start_ || !component_[w]) continue;
      if (w == start_) {
        circuits_.push_back(stack_);
        found = true;
      } else if (!blocked_[w] && Circuit(w)) {
        found = true;
      }
    }
    if (found) {
      Unblock(v);
    } else {
      for (std::size_t w : adj_[v]) {
        if (w >= start_ && component_[w]) blocked_by_[w].insert(v);
      }
    }
    stack_.pop_back();
    return found;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t start_ = 0;
  std::vector<bool> component_;
  std::vector<bool> blocked_;
  std::vector<std::set<std::size_t>> blocked_by_;
  std::vector<std::size_t> stack_;
  std::vector<std::vector<std::size_t>> circuits_;
};

}  // namespace

std::vector<Cycle> FindGenUseCycles(const ProvGraph& g) {
  std::vector<Cycle> out;
  for (const auto& circuit : CircuitFinder(g).Run()) {
    Cycle c;
    c.reserve(circuit.size());
    for (std::size_t idx : circuit) c.push_back(g.nodes()[idx].id);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace provgroup
