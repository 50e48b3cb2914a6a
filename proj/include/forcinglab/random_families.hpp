#pragma once

#include <random>
#include <stdexcept>

#include "forcinglab/classify.hpp"
#include "forcinglab/construction.hpp"
#include "forcinglab/families.hpp"
#include "forcinglab/graph.hpp"

namespace forcinglab {

// All sampling goes through the raw mt19937_64 stream (its output sequence is
// pinned by the standard) so a fixed seed reproduces byte-identical graphs on
// any platform. std::uniform_int_distribution is implementation-defined and
// deliberately avoided.
inline int rand_below(std::mt19937_64& rng, int k) {
  assert(k >= 1);
  return static_cast<int>(rng() % static_cast<std::uint64_t>(k));
}

// Threshold construction tree: each step wraps the running graph with one new
// isolated (union) or dominating (join) vertex. Leaf labels are 0..n-1 in
// leaf order, so the realized graph needs no relabeling.
inline ConstructionTree random_threshold_tree(int n, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random_threshold_tree: bad order");
  ConstructionTree t = ConstructionTree::make_leaf(0);
  for (int i = 1; i < n; ++i) {
    ConstructionTree leaf = ConstructionTree::make_leaf(i);
    t = rand_below(rng, 2) == 0
            ? ConstructionTree::make_union(std::move(t), std::move(leaf))
            : ConstructionTree::make_join(std::move(t), std::move(leaf));
  }
  return t;
}

inline Graph random_threshold(int n, std::mt19937_64& rng) {
  return from_construction_tree(random_threshold_tree(n, rng));
}

namespace detail {
inline ConstructionTree random_cograph_rec(int n, int base, std::mt19937_64& rng) {
  if (n == 1) return ConstructionTree::make_leaf(base);
  const int left = 1 + rand_below(rng, n - 1);
  ConstructionTree l = random_cograph_rec(left, base, rng);
  ConstructionTree r = random_cograph_rec(n - left, base + left, rng);
  return rand_below(rng, 2) == 0 ? ConstructionTree::make_union(std::move(l), std::move(r))
                                 : ConstructionTree::make_join(std::move(l), std::move(r));
}
}  // namespace detail

inline ConstructionTree random_cograph_tree(int n, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random_cograph_tree: bad order");
  return detail::random_cograph_rec(n, 0, rng);
}

inline Graph random_cograph(int n, std::mt19937_64& rng) {
  return from_construction_tree(random_cograph_tree(n, rng));
}

namespace detail {
// order >= 4 split into t >= 2 parts of size >= 2.
inline std::vector<int> random_parts(int order, std::mt19937_64& rng) {
  const int max_parts = order / 2;
  const int t = 2 + rand_below(rng, max_parts - 1);
  std::vector<int> parts(static_cast<std::size_t>(t), 2);
  for (int extra = order - 2 * t; extra > 0; --extra)
    ++parts[static_cast<std::size_t>(rand_below(rng, t))];
  return parts;
}
}  // namespace detail

// Random PSD fast join: complement is a disjoint union of >= 2 complete
// bipartite graphs (sides >= 1). Orders below 4 fall back to K_n.
inline Graph random_psd_fast_join(int order, std::mt19937_64& rng) {
  if (order < 2 || order > kMaxVertices)
    throw std::invalid_argument("random_psd_fast_join: order must be in [2, 64]");
  if (order < 4) return generate(Family::complete, order);
  Graph comp(0);
  for (int s : detail::random_parts(order, rng)) {
    const int p = 1 + rand_below(rng, s - 1);
    comp = disjoint_union(comp, generate(Family::complete_bipartite, p, s - p));
  }
  return complement(comp);
}

// Random standard fast join: complement components are complete (>= 2
// vertices) or complete bipartite with both sides >= 2.
inline Graph random_standard_fast_join(int order, std::mt19937_64& rng) {
  if (order < 2 || order > kMaxVertices)
    throw std::invalid_argument("random_standard_fast_join: order must be in [2, 64]");
  if (order < 4) return generate(Family::complete, order);
  Graph comp(0);
  for (int s : detail::random_parts(order, rng)) {
    if (s >= 4 && rand_below(rng, 2) == 0) {
      const int p = 2 + rand_below(rng, s - 3);
      comp = disjoint_union(comp, generate(Family::complete_bipartite, p, s - p));
    } else {
      comp = disjoint_union(comp, generate(Family::complete, s));
    }
  }
  return complement(comp);
}

// Erdos-Renyi-style graph; edge_percent in [0, 100].
inline Graph random_graph(int n, int edge_percent, std::mt19937_64& rng) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("random_graph: bad order");
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (rand_below(rng, 100) < edge_percent) e.emplace_back(u, v);
  return Graph(n, e);
}

}  // namespace forcinglab
