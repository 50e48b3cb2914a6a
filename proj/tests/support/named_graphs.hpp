#pragma once

// Hand-picked example graphs used across the suites, with the construction
// trees that realize them. Labels are 0-based.

#include "forcinglab/construction.hpp"
#include "forcinglab/families.hpp"
#include "forcinglab/graph.hpp"

namespace testsupport {

using forcinglab::ConstructionTree;
using forcinglab::Family;
using forcinglab::Graph;

// Threshold graph on 5 vertices: independents 0,1,2 all joined to the
// triangle edge {3,4}. Built by (((0 u 1) u 2) v 3) v 4.
inline Graph threshold_example5() {
  return Graph(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

inline ConstructionTree threshold_example5_tree() {
  using T = ConstructionTree;
  return T::make_join(
      T::make_join(T::make_union(T::make_union(T::make_leaf(0), T::make_leaf(1)),
                                 T::make_leaf(2)),
                   T::make_leaf(3)),
      T::make_leaf(4));
}

// Wheel on 5 vertices: rim cycle 0-1-2-3, hub 4.
inline Graph wheel5() { return forcinglab::generate(Family::wheel, 5); }

// ((0 u 1) v (2 u 3)) v 4 realizes a wheel with rim order 0-2-1-3; swapping
// labels 1 and 2 turns it into wheel5().
inline ConstructionTree wheel5_tree() {
  using T = ConstructionTree;
  return T::make_join(T::make_join(T::make_union(T::make_leaf(0), T::make_leaf(1)),
                                   T::make_union(T::make_leaf(2), T::make_leaf(3))),
                      T::make_leaf(4));
}

// Cograph on 7 vertices whose forcing number (4) differs from its upper
// forcing number (5): edge {0,1}; all edges between {0,1,2,3} and {4,5};
// vertex 6 universal. Built by (((0 v 1) u (2 u 3)) v (4 u 5)) v 6.
inline Graph cograph_example7() {
  return Graph(7, {{0, 1},
                   {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                   {0, 6}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}});
}

inline ConstructionTree cograph_example7_tree() {
  using T = ConstructionTree;
  T inner = T::make_join(
      T::make_union(T::make_join(T::make_leaf(0), T::make_leaf(1)),
                    T::make_union(T::make_leaf(2), T::make_leaf(3))),
      T::make_union(T::make_leaf(4), T::make_leaf(5)));
  return T::make_join(std::move(inner), T::make_leaf(6));
}

// Two triangles 0-1-2 and 3-4-5 linked by the edges 1-3 and 2-4. Its minimal
// standard forcing sets come in two sizes (2 and 3) yet every one of them
// propagates in exactly 3 rounds.
inline Graph linked_triangles6() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
}

// Triangle 0,1,2 with pendant 3 attached to 0 (matches Pattern::paw roles).
inline Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

// K4 minus the edge 2-3 (matches Pattern::diamond roles).
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace testsupport
