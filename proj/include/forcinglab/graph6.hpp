#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "forcinglab/graph.hpp"

namespace forcinglab {

class Graph6Error : public std::runtime_error {
 public:
  explicit Graph6Error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Upper-triangle edge bits in column-major order:
// x(0,1), x(0,2), x(1,2), x(0,3), x(1,3), x(2,3), ...
inline int triangle_bit_count(int n) { return n * (n - 1) / 2; }

inline void check_char(char c) {
  if (c < 63 || c > 126)
    throw Graph6Error("graph6 character out of range [63,126]: code " +
                      std::to_string(static_cast<int>(static_cast<unsigned char>(c))));
}

}  // namespace detail

// Decodes one graph6 string (no ">>graph6<<" header, no trailing newline).
inline Graph from_graph6(std::string_view s) {
  if (s.empty()) throw Graph6Error("empty graph6 string");
  for (char c : s) detail::check_char(c);

  std::size_t pos = 0;
  long n;
  if (s[0] == 126) {
    // Multi-byte order: '~' then three 6-bit groups, big-endian. ('~~' + 6
    // groups would follow for n > 258047 — far beyond this library's cap.)
    if (s.size() < 4) throw Graph6Error("truncated graph6 size field");
    if (s[1] == 126) throw Graph6Error("graph order exceeds 64");
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
    if (n < 63) throw Graph6Error("non-canonical multi-byte graph6 size field");
    pos = 4;
  } else {
    n = s[0] - 63;
    pos = 1;
  }
  if (n > kMaxVertices)
    throw Graph6Error("graph order " + std::to_string(n) + " exceeds 64");

  const int bits = detail::triangle_bit_count(static_cast<int>(n));
  const std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != want)
    throw Graph6Error("graph6 body has " + std::to_string(s.size() - pos) +
                      " characters, expected " + std::to_string(want));

  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  int bit = 0;
  for (std::size_t i = pos; i < s.size(); ++i) {
    const int group = s[i] - 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (group >> k) & 1;
      if (bit >= bits) {
        if (set) throw Graph6Error("nonzero padding bits in graph6 body");
        continue;
      }
      if (set) {
        // Invert bit index -> (u, v) with u < v: bits for column v occupy
        // positions [v(v-1)/2, v(v+1)/2).
        int v = 1;
        while (detail::triangle_bit_count(v + 1) <= bit) ++v;
        const int u = bit - detail::triangle_bit_count(v);
        adj[static_cast<std::size_t>(u)].add(v);
        adj[static_cast<std::size_t>(v)].add(u);
      }
    }
  }
  return Graph::from_adjacency(static_cast<int>(n), std::move(adj));
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

}  // namespace forcinglab
