#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "forcinglab/graph.hpp"

namespace forcinglab {

// Color change rules.
//  Standard: a blue vertex with exactly one white neighbor forces it.
//  PSD:      components of the white subgraph are considered separately; a
//            blue vertex with exactly one white neighbor *inside a component*
//            forces that neighbor.
// Rounds are simultaneous: every force available at the start of a round is
// applied in that round.
enum class Rule { standard, psd };

inline const char* rule_name(Rule r) { return r == Rule::standard ? "standard" : "psd"; }

// One application of the color change rule: all vertices forceable from
// `blue` in a single round. Returns newly blue vertices only.
inline VertexSet step(const Graph& g, VertexSet blue, Rule rule) {
  const VertexSet white = g.vertices() - blue;
  VertexSet forced;
  if (rule == Rule::standard) {
    for (int u : blue) {
      const VertexSet w = g.neighbors(u) & white;
      if (w.is_singleton()) forced = forced | w;
    }
  } else {
    for (VertexSet comp : components_within(g, white)) {
      for (int u : blue) {
        const VertexSet w = g.neighbors(u) & comp;
        if (w.is_singleton()) forced = forced | w;
      }
    }
  }
  return forced;
}

struct Force {
  int forcer;
  int forced;
  friend bool operator==(Force a, Force b) {
    return a.forcer == b.forcer && a.forced == b.forced;
  }
};

// Full propagation trace from an initial set.
//  rounds[i]   = vertices first forced in round i+1
//  closures[i] = blue set after i rounds (closures[0] is the initial set)
//  forces[i]   = one witness force per vertex of rounds[i], lowest-index
//                forcer first; a PSD vertex adjacent to a unique white vertex
//                in several components witnesses a force in each
//  time        = number of rounds if the closure reaches V(g), else nullopt
struct PropagationRecord {
  std::vector<VertexSet> rounds;
  std::vector<VertexSet> closures;
  std::vector<std::vector<Force>> forces;
  std::optional<int> time;

  bool forcing() const { return time.has_value(); }
  VertexSet closure() const { return closures.back(); }
};

namespace detail {

// Witness forces for one round, lowest-index forcer per forced vertex.
inline std::vector<Force> round_witnesses(const Graph& g, VertexSet blue, VertexSet forced,
                                          Rule rule) {
  std::vector<Force> out;
  const VertexSet white = g.vertices() - blue;
  for (int w : forced) {
    int forcer = -1;
    if (rule == Rule::standard) {
      for (int u : blue) {
        if ((g.neighbors(u) & white) == VertexSet::single(w)) {
          forcer = u;
          break;
        }
      }
    } else {
      const VertexSet comp = component_of(g, w, white);
      for (int u : blue) {
        if ((g.neighbors(u) & comp) == VertexSet::single(w)) {
          forcer = u;
          break;
        }
      }
    }
    assert(forcer >= 0);
    out.push_back(Force{forcer, w});
  }
  return out;
}

}  // namespace detail

inline PropagationRecord propagate(const Graph& g, VertexSet initial, Rule rule) {
  assert(initial.is_subset_of(g.vertices()));
  PropagationRecord rec;
  VertexSet blue = initial;
  rec.closures.push_back(blue);
  while (blue != g.vertices()) {
    const VertexSet forced = step(g, blue, rule);
    if (forced.empty()) return rec;  // stalled; time stays unset
    rec.forces.push_back(detail::round_witnesses(g, blue, forced, rule));
    rec.rounds.push_back(forced);
    blue = blue | forced;
    rec.closures.push_back(blue);
  }
  rec.time = static_cast<int>(rec.rounds.size());
  return rec;
}

// Propagation time without building a trace.
inline std::optional<int> propagation_time(const Graph& g, VertexSet initial, Rule rule) {
  VertexSet blue = initial;
  int t = 0;
  while (blue != g.vertices()) {
    const VertexSet forced = step(g, blue, rule);
    if (forced.empty()) return std::nullopt;
    blue = blue | forced;
    ++t;
  }
  return t;
}

inline bool is_forcing_set(const Graph& g, VertexSet b, Rule rule) {
  return propagation_time(g, b, rule).has_value();
}

// PSD set reduction: replace each vertex that performs a witness force in
// round 1 by the vertex it forces. Preserves cardinality, keeps the set PSD
// forcing, and drops the PSD propagation time by exactly one whenever it was
// at least 2. Preconditions: b is PSD forcing, g - b is connected, and the
// PSD propagation time of b is >= 1.
inline VertexSet psd_reduce_set(const Graph& g, VertexSet b) {
  const VertexSet white = g.vertices() - b;
  if (white.empty()) throw std::invalid_argument("psd_reduce_set: propagation time is 0");
  if (!is_connected(induced_subgraph(g, white)))
    throw std::invalid_argument("psd_reduce_set: g - b is not connected");
  const PropagationRecord rec = propagate(g, b, Rule::psd);
  if (!rec.forcing()) throw std::invalid_argument("psd_reduce_set: b is not a PSD forcing set");
  VertexSet out = b;
  for (Force f : rec.forces.front()) out = out.without(f.forcer).with(f.forced);
  return out;
}

}  // namespace forcinglab
