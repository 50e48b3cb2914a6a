#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "forcinglab/construction.hpp"
#include "forcinglab/graph.hpp"
#include "forcinglab/search.hpp"

namespace forcinglab {

// ---------------------------------------------------------------------------
// Component shapes

enum class ShapeTag { complete, complete_bipartite, other };

struct ComponentShape {
  VertexSet vertices;  // in the host graph's numbering
  ShapeTag tag = ShapeTag::other;
  // Set for complete_bipartite (and for K_2, which is tagged complete but is
  // also K_{1,1}); sides satisfy p <= q.
  int p = 0, q = 0;
  VertexSet side_a, side_b;
  bool is_complete = false;           // complete on >= 1 vertices
  bool is_complete_bipartite = false; // both sides >= 1
};

namespace detail {

// Shape of one connected component `comp` of g.
inline ComponentShape shape_of_component(const Graph& g, VertexSet comp) {
  ComponentShape s;
  s.vertices = comp;
  assert(comp.count() >= 1);

  s.is_complete = true;
  for (int v : comp)
    if ((g.neighbors(v) & comp) != comp.without(v)) {
      s.is_complete = false;
      break;
    }

  // 2-color by BFS layers from the lowest vertex; comp is connected.
  VertexSet color[2] = {VertexSet::single(comp.lowest()), VertexSet{}};
  VertexSet frontier = color[0];
  int cur = 0;
  bool bipartite = true;
  while (!frontier.empty()) {
    VertexSet nbrs;
    for (int v : frontier) nbrs = nbrs | (g.neighbors(v) & comp);
    if (nbrs.intersects(color[cur])) {  // edge inside one side: odd cycle
      bipartite = false;
      break;
    }
    const VertexSet fresh = nbrs - color[1 - cur];
    color[1 - cur] = color[1 - cur] | fresh;
    frontier = fresh;
    cur = 1 - cur;
  }
  VertexSet color_a = color[0], color_b = color[1];
  if (bipartite && !color_a.empty() && !color_b.empty()) {
    s.is_complete_bipartite = true;
    for (int v : color_a)
      if ((g.neighbors(v) & comp) != color_b) {
        s.is_complete_bipartite = false;
        break;
      }
    if (s.is_complete_bipartite)
      for (int v : color_b)
        if ((g.neighbors(v) & comp) != color_a) {
          s.is_complete_bipartite = false;
          break;
        }
  }
  if (s.is_complete_bipartite) {
    if (color_a.count() > color_b.count()) std::swap(color_a, color_b);
    s.side_a = color_a;
    s.side_b = color_b;
    s.p = color_a.count();
    s.q = color_b.count();
  }
  s.tag = s.is_complete               ? ShapeTag::complete
          : s.is_complete_bipartite   ? ShapeTag::complete_bipartite
                                      : ShapeTag::other;
  return s;
}

}  // namespace detail

// Shapes of all components of g (complete wins the tag for K_2).
inline std::vector<ComponentShape> classify_component_shape(const Graph& g) {
  std::vector<ComponentShape> out;
  for (VertexSet comp : components(g)) out.push_back(detail::shape_of_component(g, comp));
  return out;
}

// ---------------------------------------------------------------------------
// Fast joins
//
// A graph is a PSD fast join iff it is complete (n >= 2) or its complement's
// components are all complete bipartite with both sides >= 1. It is a
// standard fast join iff it is complete or every complement component is
// complete on >= 2 vertices or complete bipartite with both sides >= 2.
// (A K_1 complement component is a universal vertex and fails both forms;
// K_2 counts as complete for the standard form and as K_{1,1} for PSD.)
// The recognizers are purely structural; they never run the forcing engine.

struct FastJoinVerdict {
  bool psd_fast = false;
  bool standard_fast = false;
  bool graph_complete = false;
  std::vector<ComponentShape> complement_components;  // empty when complete
  std::string psd_failure, standard_failure;          // empty when fast
};

inline FastJoinVerdict fast_join_verdict(const Graph& g) {
  if (g.order() < 2)
    throw std::invalid_argument("fast_join_verdict: order must be >= 2");
  FastJoinVerdict v;
  const Graph c = complement(g);
  if (c.edge_count() == 0) {
    v.graph_complete = v.psd_fast = v.standard_fast = true;
    return v;
  }
  v.complement_components = classify_component_shape(c);
  if (v.complement_components.size() < 2) {
    v.psd_failure = v.standard_failure =
        "complement is connected and the graph is not complete (not a join)";
    return v;
  }
  v.psd_fast = v.standard_fast = true;
  for (const ComponentShape& s : v.complement_components) {
    const std::string where = "complement component " + s.vertices.to_string();
    if (v.psd_fast && !s.is_complete_bipartite) {
      v.psd_fast = false;
      v.psd_failure = where + " is not complete bipartite";
    }
    const bool std_ok =
        (s.is_complete && s.vertices.count() >= 2) ||
        (s.is_complete_bipartite && s.p >= 2 && s.q >= 2);
    if (v.standard_fast && !std_ok) {
      v.standard_fast = false;
      v.standard_failure =
          where + " is neither complete (>= 2 vertices) nor complete bipartite with sides >= 2";
    }
  }
  return v;
}

inline bool is_psd_fast_join(const Graph& g) { return fast_join_verdict(g).psd_fast; }
inline bool is_standard_fast_join(const Graph& g) { return fast_join_verdict(g).standard_fast; }

// ---------------------------------------------------------------------------
// Threshold recognition

struct ThresholdRecognition {
  bool threshold = false;
  // Peeling witness; realizing it (with its leaf-order relabeling) rebuilds
  // the input. Absent when not threshold or when the graph is empty.
  std::optional<ConstructionTree> tree;
};

inline ThresholdRecognition is_threshold(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {true, std::nullopt};
  std::vector<int> peeled;
  std::vector<bool> was_isolated;
  VertexSet rest = g.vertices();
  while (rest.count() > 1) {
    int pick = -1;
    bool isolated = false;
    for (int v : rest) {
      const int deg = (g.neighbors(v) & rest).count();
      if (deg == 0 || deg == rest.count() - 1) {
        pick = v;
        isolated = deg == 0;
        break;
      }
    }
    if (pick < 0) return {false, std::nullopt};
    peeled.push_back(pick);
    was_isolated.push_back(isolated);
    rest = rest.without(pick);
  }
  ConstructionTree t = ConstructionTree::make_leaf(rest.lowest());
  for (int i = static_cast<int>(peeled.size()) - 1; i >= 0; --i) {
    ConstructionTree leaf = ConstructionTree::make_leaf(peeled[static_cast<std::size_t>(i)]);
    t = was_isolated[static_cast<std::size_t>(i)]
            ? ConstructionTree::make_union(std::move(t), std::move(leaf))
            : ConstructionTree::make_join(std::move(t), std::move(leaf));
  }
  return {true, std::move(t)};
}

// ---------------------------------------------------------------------------
// Forbidden induced subgraphs (order 4)

enum class Pattern { P4, P3_plus_K1, K2_plus_2K1, paw, diamond };

inline const char* pattern_name(Pattern p) {
  switch (p) {
    case Pattern::P4: return "P4";
    case Pattern::P3_plus_K1: return "P3+K1";
    case Pattern::K2_plus_2K1: return "K2+2K1";
    case Pattern::paw: return "paw";
    case Pattern::diamond: return "diamond";
  }
  return "?";
}

// Role adjacency for each pattern, as bits over the ordered pairs
// (0,1),(0,2),(0,3),(1,2),(1,3),(2,3). Roles follow the slow-set
// construction: P4 is the path 0-1-2-3, P3+K1 is the path 0-1-2 plus
// isolated 3, K2+2K1 is the edge 1-2 plus isolated 0 and 3. The paw is the
// triangle 0,1,2 with pendant 3 on 0; the diamond is K4 minus the edge 2-3.
inline unsigned pattern_edge_bits(Pattern p) {
  auto bit = [](int pair) { return 1u << pair; };
  switch (p) {
    case Pattern::P4: return bit(0) | bit(3) | bit(5);
    case Pattern::P3_plus_K1: return bit(0) | bit(3);
    case Pattern::K2_plus_2K1: return bit(3);
    case Pattern::paw: return bit(0) | bit(1) | bit(2) | bit(3);
    case Pattern::diamond: return bit(0) | bit(1) | bit(2) | bit(3) | bit(4);
  }
  return 0;
}

inline Graph pattern_graph(Pattern p) {
  const unsigned bits = pattern_edge_bits(p);
  static constexpr std::array<std::pair<int, int>, 6> kPairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 6; ++i)
    if ((bits >> i) & 1) e.push_back(kPairs[static_cast<std::size_t>(i)]);
  return Graph(4, e);
}

struct PatternEmbedding {
  Pattern pattern;
  std::array<int, 4> vertices;  // by role
};

// First induced embedding (role-ordered 4-tuple, lexicographic scan) of any
// listed pattern; patterns are tried in the given order for each tuple.
inline std::optional<PatternEmbedding> forbidden_subgraph_scan(
    const Graph& g, const std::vector<Pattern>& patterns) {
  const int n = g.order();
  std::array<int, 4> t{};
  for (t[0] = 0; t[0] < n; ++t[0])
    for (t[1] = 0; t[1] < n; ++t[1]) {
      if (t[1] == t[0]) continue;
      for (t[2] = 0; t[2] < n; ++t[2]) {
        if (t[2] == t[0] || t[2] == t[1]) continue;
        for (t[3] = 0; t[3] < n; ++t[3]) {
          if (t[3] == t[0] || t[3] == t[1] || t[3] == t[2]) continue;
          unsigned bits = 0, pair = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j, ++pair)
              if (g.has_edge(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]))
                bits |= 1u << pair;
          for (Pattern p : patterns)
            if (bits == pattern_edge_bits(p)) return PatternEmbedding{p, t};
        }
      }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Small structural helpers

struct TwinPairs {
  std::vector<std::pair<int, int>> closed;       // N[u] = N[v] (adjacent)
  std::vector<std::pair<int, int>> independent;  // N(u) = N(v) (non-adjacent)
};

inline TwinPairs twins(const Graph& g) {
  TwinPairs out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.closed_neighborhood(u) == g.closed_neighborhood(v)) out.closed.emplace_back(u, v);
      if (g.neighbors(u) == g.neighbors(v)) out.independent.emplace_back(u, v);
    }
  return out;
}

inline VertexSet universal_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) out.add(v);
  return out;
}

inline VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.add(v);
  return out;
}

namespace detail {
inline int independence_rec(const Graph& g, VertexSet rest) {
  if (rest.empty()) return 0;
  const int v = rest.lowest();
  const VertexSet nbrs = g.neighbors(v) & rest;
  const int take = 1 + independence_rec(g, rest - nbrs.with(v));
  if (nbrs.empty()) return take;  // isolated in rest: always take
  return std::max(take, independence_rec(g, rest.without(v)));
}
}  // namespace detail

inline int independence_number(const Graph& g, int cap = kDefaultExhaustiveCap) {
  detail::check_cap("independence_number", g.order(), cap);
  return detail::independence_rec(g, g.vertices());
}

// ---------------------------------------------------------------------------
// Dominated adjacent pairs
//
// If u,v are adjacent with N[u] strictly contained in N[v], then
// B = V - {u,v} forces under both rules with propagation time exactly 2.

struct DominatedPairWitness {
  int dominated = -1;  // u
  int dominating = -1; // v
  VertexSet slow_set;  // V - {u, v}
};

inline std::optional<DominatedPairWitness> dominated_pair_slow_witness(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) {
      if (u == v) continue;
      const VertexSet nu = g.closed_neighborhood(u), nv = g.closed_neighborhood(v);
      if (nu != nv && nu.is_subset_of(nv))
        return DominatedPairWitness{u, v, g.vertices().without(u).without(v)};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Z >= n-2 structural form
//
// Z(G) >= n-2 exactly when the complement is a (possibly empty) disjoint
// union of complete graphs and complete bipartite graphs, joined with a
// (possibly empty) clique: equivalently, after removing every universal
// vertex of the complement, each remaining component is complete or complete
// bipartite.

inline bool z_at_least_n_minus_2_form(const Graph& g) {
  const Graph c = complement(g);
  const VertexSet rest = c.vertices() - universal_vertices(c);
  for (VertexSet comp : components_within(c, rest)) {
    const ComponentShape s = detail::shape_of_component(c, comp);
    if (!s.is_complete && !s.is_complete_bipartite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Conjecture check: graphs whose minimal forcing sets all propagate in one
// round should be fast joins. The structural side never consults the forcing
// engine, so the two routes stay independent.

struct ConjectureCheck {
  Rule rule;
  int pt_bar = 0;                 // max time over minimal forcing sets
  bool premise = false;           // pt_bar == 1
  bool fast_join = false;         // structural verdict for the same rule
  bool counterexample = false;    // premise holds but not a fast join
  bool converse_violation = false;// fast join whose pt_bar != 1 (engine bug if ever true)
};

inline ConjectureCheck conjecture_check(const Graph& g, Rule rule,
                                        int cap = kDefaultExhaustiveCap) {
  if (!is_connected(g))
    throw std::invalid_argument("conjecture_check: graph must be connected");
  ConjectureCheck out;
  out.rule = rule;
  const RuleAnalysis a = analyze_rule(g, rule, cap);
  out.pt_bar = a.expanded.times.empty() ? 0 : a.expanded.times.back();
  out.premise = out.pt_bar == 1;
  if (g.order() >= 2) {
    const FastJoinVerdict v = fast_join_verdict(g);
    out.fast_join = rule == Rule::psd ? v.psd_fast : v.standard_fast;
  }
  out.counterexample = out.premise && !out.fast_join;
  out.converse_violation = out.fast_join && out.pt_bar != 1;
  return out;
}

}  // namespace forcinglab
