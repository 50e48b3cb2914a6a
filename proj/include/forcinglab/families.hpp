#pragma once

#include <stdexcept>
#include <string>

#include "forcinglab/graph.hpp"

namespace forcinglab {

enum class Family {
  path,               // n >= 1, vertices 0..n-1 in path order
  cycle,              // n >= 3, edges {i, i+1 mod n}
  complete,           // n >= 0
  complete_bipartite, // sides n >= 1 (vertices 0..n-1) and m >= 1 (n..n+m-1)
  star,               // n >= 2 total vertices; leaves 0..n-2, center n-1
  wheel,              // n >= 4; rim cycle 0..n-2, hub n-1
  empty,              // n >= 0 isolated vertices
  sgap,               // k >= 0: P_{8+2k} (vertices 0..7+2k) joined to (7+2k)K_1
};

struct FamilySpec {
  Family family;
  int n = 0;  // order (or first side for complete_bipartite)
  int m = 0;  // second side for complete_bipartite
  int k = 0;  // sgap parameter
};

namespace detail {
[[noreturn]] inline void bad_family(const std::string& msg) {
  throw std::invalid_argument("invalid family parameter: " + msg);
}
}  // namespace detail

inline Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path: {
      if (spec.n < 1) detail::bad_family("path needs n >= 1");
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i + 1 < spec.n; ++i) e.emplace_back(i, i + 1);
      return Graph(spec.n, e);
    }
    case Family::cycle: {
      if (spec.n < 3) detail::bad_family("cycle needs n >= 3");
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i < spec.n; ++i) e.emplace_back(i, (i + 1) % spec.n);
      return Graph(spec.n, e);
    }
    case Family::complete: {
      if (spec.n < 0) detail::bad_family("complete needs n >= 0");
      std::vector<std::pair<int, int>> e;
      for (int v = 1; v < spec.n; ++v)
        for (int u = 0; u < v; ++u) e.emplace_back(u, v);
      return Graph(spec.n, e);
    }
    case Family::complete_bipartite: {
      if (spec.n < 1 || spec.m < 1) detail::bad_family("complete_bipartite needs both sides >= 1");
      std::vector<std::pair<int, int>> e;
      for (int u = 0; u < spec.n; ++u)
        for (int v = 0; v < spec.m; ++v) e.emplace_back(u, spec.n + v);
      return Graph(spec.n + spec.m, e);
    }
    case Family::star: {
      if (spec.n < 2) detail::bad_family("star needs n >= 2");
      std::vector<std::pair<int, int>> e;
      for (int v = 0; v + 1 < spec.n; ++v) e.emplace_back(v, spec.n - 1);
      return Graph(spec.n, e);
    }
    case Family::wheel: {
      if (spec.n < 4) detail::bad_family("wheel needs n >= 4");
      std::vector<std::pair<int, int>> e;
      const int rim = spec.n - 1;
      for (int i = 0; i < rim; ++i) {
        e.emplace_back(i, (i + 1) % rim);
        e.emplace_back(i, rim);
      }
      return Graph(spec.n, e);
    }
    case Family::empty: {
      if (spec.n < 0) detail::bad_family("empty needs n >= 0");
      return Graph(spec.n);
    }
    case Family::sgap: {
      if (spec.k < 0) detail::bad_family("sgap needs k >= 0");
      const int a = 8 + 2 * spec.k;  // path part
      const int b = 7 + 2 * spec.k;  // independent part
      if (a + b > kMaxVertices) detail::bad_family("sgap order exceeds 64");
      return join(generate({Family::path, a}), generate({Family::empty, b}));
    }
  }
  detail::bad_family("unknown family");
}

// Convenience: n is the family's primary parameter (k for sgap).
inline Graph generate(Family f, int n, int m = 0) { return generate(FamilySpec{f, n, m, n}); }

// sgap(k): the gap family. Order 15+4k.
inline Graph sgap_graph(int k) {
  FamilySpec spec;
  spec.family = Family::sgap;
  spec.k = k;
  return generate(spec);
}

// Path part (blue side of the canonical minimum set) and independent part.
inline VertexSet sgap_path_part(int k) { return VertexSet::full(8 + 2 * k); }
inline VertexSet sgap_independent_part(int k) {
  return VertexSet::full(15 + 4 * k) - sgap_path_part(k);
}

}  // namespace forcinglab
