#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "forcinglab/forcing.hpp"
#include "forcinglab/forts.hpp"
#include "forcinglab/graph.hpp"

namespace forcinglab {

struct SetFamily {
  Rule rule;
  bool minimal;  // false: all minimum forcing sets; true: all minimal ones
  std::vector<VertexSet> sets;  // by cardinality, then ascending bitmask

  int min_cardinality() const { return sets.empty() ? 0 : sets.front().count(); }
  int max_cardinality() const { return sets.empty() ? 0 : sets.back().count(); }
};

// Realized propagation times over a family of forcing sets.
//  expanded=false: over all minimum forcing sets (the plain set)
//  expanded=true:  over all minimal forcing sets (the expanded set)
struct PtSet {
  Rule rule;
  bool expanded;
  std::vector<int> times;  // sorted, deduplicated
  std::vector<int> gaps;   // integers strictly between min and max not realized
  // True when V(g) is the only forcing set (edgeless graphs): times = {0} by
  // the start-all-blue convention rather than a guessed positive time.
  bool full_set_only = false;
};

// Everything an exhaustive subset scan yields for one rule.
struct RuleAnalysis {
  Rule rule;
  int forcing_number = 0;        // Z / Z+
  int upper_forcing_number = 0;  // max cardinality of a minimal forcing set
  SetFamily minimum_family;
  SetFamily minimal_family;
  PtSet plain;     // times over minimum sets
  PtSet expanded;  // times over minimal sets
  std::optional<int> fixed_pt;  // value iff expanded.times is a singleton
  int throttling = 0;           // min over forcing B of |B| + pt(g, B)
  std::map<int, VertexSet> witnesses;  // realized expanded time -> first minimal set
};

namespace detail {

// Forcing status of every subset, packed one bit per mask.
struct SubsetTable {
  std::vector<std::uint64_t> bits;
  explicit SubsetTable(int n) : bits(std::size_t{1} << std::max(0, n - 6), 0) {}
  bool get(std::uint64_t mask) const { return (bits[mask >> 6] >> (mask & 63)) & 1; }
  void set(std::uint64_t mask) { bits[mask >> 6] |= std::uint64_t{1} << (mask & 63); }
};

inline void sort_by_cardinality_then_mask(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.raw() < b.raw();
  });
}

inline std::vector<int> gaps_of(const std::vector<int>& times) {
  std::vector<int> gaps;
  if (times.size() < 2) return gaps;
  for (int t = times.front() + 1; t < times.back(); ++t)
    if (!std::binary_search(times.begin(), times.end(), t)) gaps.push_back(t);
  return gaps;
}

}  // namespace detail

// Exhaustive analysis of one rule: scans every subset once for forcing status
// and throttling, derives the minimum/minimal families from the table, then
// re-propagates family members for their times.
inline RuleAnalysis analyze_rule(const Graph& g, Rule rule, int cap = kDefaultExhaustiveCap) {
  detail::check_cap("analyze_rule", g.order(), cap);
  const int n = g.order();
  RuleAnalysis out;
  out.rule = rule;
  out.minimum_family = SetFamily{rule, false, {}};
  out.minimal_family = SetFamily{rule, true, {}};

  detail::SubsetTable forcing(n);
  int z = n;
  int throttle = n;  // B = V always forces with time 0
  const std::uint64_t end = n == 0 ? 1 : (std::uint64_t{1} << n);
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    const VertexSet b(mask);
    if (const auto t = propagation_time(g, b, rule)) {
      forcing.set(mask);
      z = std::min(z, b.count());
      throttle = std::min(throttle, b.count() + *t);
    }
  }
  out.throttling = throttle;
  out.forcing_number = z;

  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (!forcing.get(mask)) continue;
    const VertexSet b(mask);
    if (b.count() == z) out.minimum_family.sets.push_back(b);
    bool minimal = true;
    for (int v : b) {
      if (forcing.get(mask & ~(std::uint64_t{1} << v))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.minimal_family.sets.push_back(b);
  }
  detail::sort_by_cardinality_then_mask(out.minimum_family.sets);
  detail::sort_by_cardinality_then_mask(out.minimal_family.sets);
  out.upper_forcing_number = out.minimal_family.max_cardinality();

  const bool degenerate =
      out.minimal_family.sets.size() == 1 && out.minimal_family.sets.front() == g.vertices();
  auto fill_times = [&](const SetFamily& fam, bool expanded) {
    PtSet ps{rule, expanded, {}, {}, degenerate};
    for (VertexSet b : fam.sets) {
      const auto t = propagation_time(g, b, rule);
      assert(t.has_value());
      ps.times.push_back(*t);
      if (expanded && !out.witnesses.count(*t)) out.witnesses.emplace(*t, b);
    }
    std::sort(ps.times.begin(), ps.times.end());
    ps.times.erase(std::unique(ps.times.begin(), ps.times.end()), ps.times.end());
    ps.gaps = detail::gaps_of(ps.times);
    return ps;
  };
  out.expanded = fill_times(out.minimal_family, true);
  out.plain = fill_times(out.minimum_family, false);
  if (out.expanded.times.size() == 1) out.fixed_pt = out.expanded.times.front();
  return out;
}

// Minimum and minimal forcing-set families for one rule.
inline std::pair<SetFamily, SetFamily> enumerate_forcing_families(
    const Graph& g, Rule rule, int cap = kDefaultExhaustiveCap) {
  RuleAnalysis a = analyze_rule(g, rule, cap);
  return {std::move(a.minimum_family), std::move(a.minimal_family)};
}

// Plain and expanded propagation-time sets.
inline std::pair<PtSet, PtSet> pt_sets(const Graph& g, Rule rule,
                                       int cap = kDefaultExhaustiveCap) {
  RuleAnalysis a = analyze_rule(g, rule, cap);
  return {std::move(a.plain), std::move(a.expanded)};
}

// The fixed propagation time, present iff the expanded set is a singleton.
inline std::optional<int> fixed_pt(const Graph& g, Rule rule, int cap = kDefaultExhaustiveCap) {
  return analyze_rule(g, rule, cap).fixed_pt;
}

// Standard-rule throttling number: min over all forcing sets of |B| + pt.
inline int throttling(const Graph& g, int cap = kDefaultExhaustiveCap) {
  return analyze_rule(g, Rule::standard, cap).throttling;
}

// First minimum PSD forcing set (cardinality-then-bitmask order) whose
// complement induces a connected subgraph. Such a set exists for every
// connected graph; an empty remainder counts as connected.
inline VertexSet min_psd_set_with_connected_complement(const Graph& g,
                                                       int cap = kDefaultExhaustiveCap) {
  if (!is_connected(g))
    throw std::invalid_argument("min_psd_set_with_connected_complement: graph is disconnected");
  RuleAnalysis a = analyze_rule(g, Rule::psd, cap);
  for (VertexSet b : a.minimum_family.sets) {
    const VertexSet rest = g.vertices() - b;
    if (rest.empty() || is_connected(induced_subgraph(g, rest))) return b;
  }
  throw std::logic_error("no minimum PSD forcing set has a connected complement");
}

// True when the graph does NOT have fixed PSD propagation time > 1.
inline bool verify_no_fixed_psd_above_one(const Graph& g, int cap = kDefaultExhaustiveCap) {
  const auto f = fixed_pt(g, Rule::psd, cap);
  return !(f.has_value() && *f > 1);
}

}  // namespace forcinglab
