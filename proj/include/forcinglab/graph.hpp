#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "forcinglab/vertex_set.hpp"

namespace forcinglab {

// Simple undirected graph on vertices 0..n-1, n <= 64. Adjacency is one
// bitset row per vertex; rows stay symmetric and irreflexive by construction.
// Instances are immutable after construction.
class Graph {
 public:
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(check_order(n))) {}

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge_internal(u, v);
  }

  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge_internal(u, v);
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  VertexSet neighbors(int v) const {
    assert(v >= 0 && v < n_);
    return adj_[static_cast<std::size_t>(v)];
  }
  VertexSet closed_neighborhood(int v) const { return neighbors(v).with(v); }

  bool has_edge(int u, int v) const { return u != v && neighbors(u).contains(v); }
  int degree(int v) const { return neighbors(v).count(); }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v)
      for (int u : neighbors(v))
        if (u > v) out.emplace_back(v, u);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

  // Named constructor used by the builders below; kept out of the public
  // mutation surface on purpose.
  static Graph from_adjacency(int n, std::vector<VertexSet> adj) {
    Graph g(n);
    assert(adj.size() == static_cast<std::size_t>(n));
    g.adj_ = std::move(adj);
    for (int v = 0; v < n; ++v) {
      assert(g.adj_[static_cast<std::size_t>(v)].is_subset_of(VertexSet::full(n)));
      assert(!g.adj_[static_cast<std::size_t>(v)].contains(v));
    }
    return g;
  }

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(n));
    return n;
  }

  void add_edge_internal(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
  }

  int n_;
  std::vector<VertexSet> adj_;
};

inline Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    adj[static_cast<std::size_t>(v)] = g.neighbors(v).complement_within(n).without(v);
  return Graph::from_adjacency(n, std::move(adj));
}

// Vertices of g2 are shifted up by g1.order() in both combinators.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n = n1 + g2.order();
  if (n > kMaxVertices) throw std::invalid_argument("combined order exceeds 64");
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n1; ++v) adj[static_cast<std::size_t>(v)] = g1.neighbors(v);
  for (int v = 0; v < g2.order(); ++v)
    adj[static_cast<std::size_t>(n1 + v)] = VertexSet(g2.neighbors(v).raw() << n1);
  return Graph::from_adjacency(n, std::move(adj));
}

inline Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  Graph u = disjoint_union(g1, g2);
  const int n = u.order();
  const VertexSet left = VertexSet::full(n1);
  const VertexSet right = VertexSet::full(n) - left;
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    adj[static_cast<std::size_t>(v)] = u.neighbors(v) | (v < n1 ? right : left);
  return Graph::from_adjacency(n, std::move(adj));
}

// Connected component containing seed, restricted to `within`.
inline VertexSet component_of(const Graph& g, int seed, VertexSet within) {
  assert(within.contains(seed));
  VertexSet comp = VertexSet::single(seed);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next = next | g.neighbors(v);
    frontier = (next & within) - comp;
    comp = comp | frontier;
  }
  return comp;
}

inline std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> comps;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = component_of(g, rest.lowest(), rest);
    comps.push_back(comp);
    rest = rest - comp;
  }
  return comps;
}

inline std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, g.vertices());
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return component_of(g, 0, g.vertices()) == g.vertices();
}

// Induced subgraph on `keep`; vertices are renumbered 0..|keep|-1 preserving
// their relative order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  assert(keep.is_subset_of(g.vertices()));
  std::vector<int> old_of;
  old_of.reserve(static_cast<std::size_t>(keep.count()));
  std::vector<int> new_of(static_cast<std::size_t>(g.order()), -1);
  for (int v : keep) {
    new_of[static_cast<std::size_t>(v)] = static_cast<int>(old_of.size());
    old_of.push_back(v);
  }
  const int m = static_cast<int>(old_of.size());
  std::vector<VertexSet> adj(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int u : g.neighbors(old_of[static_cast<std::size_t>(i)]) & keep)
      adj[static_cast<std::size_t>(i)].add(new_of[static_cast<std::size_t>(u)]);
  }
  return Graph::from_adjacency(m, std::move(adj));
}

// perm[v] = new index of old vertex v; perm must be a permutation of 0..n-1.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  assert(perm.size() == static_cast<std::size_t>(n));
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v))
      adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])].add(
          perm[static_cast<std::size_t>(u)]);
  return Graph::from_adjacency(n, std::move(adj));
}

}  // namespace forcinglab
