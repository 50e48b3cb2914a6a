#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "forcinglab/forcing.hpp"
#include "forcinglab/graph.hpp"

namespace forcinglab {

// Exhaustive subset scans refuse to run above this order unless the caller
// raises the cap explicitly.
inline constexpr int kDefaultExhaustiveCap = 20;

class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& op, int n, int cap)
      : std::runtime_error(op + ": order " + std::to_string(n) + " exceeds exhaustive cap " +
                           std::to_string(cap)) {}
};

namespace detail {
inline void check_cap(const char* op, int n, int cap) {
  if (n > cap) throw CapExceededError(op, n, cap);
}
}  // namespace detail

// A (standard) fort is a nonempty F such that no vertex outside F has exactly
// one neighbor in F. Blocks standard forcing: no force can enter F.
inline bool is_standard_fort(const Graph& g, VertexSet f) {
  if (f.empty() || !f.is_subset_of(g.vertices())) return false;
  for (int v : g.vertices() - f)
    if ((g.neighbors(v) & f).is_singleton()) return false;
  return true;
}

// A PSD fort applies the same condition per component of g[F]: no outside
// vertex may have exactly one neighbor in any single component of g[F].
inline bool is_psd_fort(const Graph& g, VertexSet f) {
  if (f.empty() || !f.is_subset_of(g.vertices())) return false;
  const std::vector<VertexSet> comps = components_within(g, f);
  for (int v : g.vertices() - f)
    for (VertexSet comp : comps)
      if ((g.neighbors(v) & comp).is_singleton()) return false;
  return true;
}

inline bool is_fort(const Graph& g, VertexSet f, Rule rule) {
  return rule == Rule::standard ? is_standard_fort(g, f) : is_psd_fort(g, f);
}

struct FortFamily {
  Rule rule;
  bool minimal_only;
  std::vector<VertexSet> forts;  // by cardinality, then ascending bitmask
};

// All forts (or only the inclusion-minimal ones) by exhaustive scan.
inline FortFamily enumerate_forts(const Graph& g, Rule rule, bool minimal_only = true,
                                  int cap = kDefaultExhaustiveCap) {
  detail::check_cap("enumerate_forts", g.order(), cap);
  FortFamily fam{rule, minimal_only, {}};
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    for_each_subset_of_size(n, k, [&](VertexSet f) {
      if (!is_fort(g, f, rule)) return;
      if (minimal_only) {
        // Scanning by ascending cardinality, every proper fort subset of f is
        // already in the family.
        for (VertexSet kept : fam.forts)
          if (kept.is_subset_of(f)) return;
      }
      fam.forts.push_back(f);
    });
  }
  return fam;
}

// A set is forcing iff it intersects every fort; minimal forts suffice.
inline bool hits_all_forts(const Graph& g, VertexSet b, Rule rule,
                           int cap = kDefaultExhaustiveCap) {
  const FortFamily fam = enumerate_forts(g, rule, /*minimal_only=*/true, cap);
  return std::all_of(fam.forts.begin(), fam.forts.end(),
                     [&](VertexSet f) { return f.intersects(b); });
}

inline bool hits_all_forts(const FortFamily& minimal_forts, VertexSet b) {
  return std::all_of(minimal_forts.forts.begin(), minimal_forts.forts.end(),
                     [&](VertexSet f) { return f.intersects(b); });
}

}  // namespace forcinglab
