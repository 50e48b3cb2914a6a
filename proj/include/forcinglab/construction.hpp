#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "forcinglab/graph.hpp"

namespace forcinglab {

// Binary cograph construction tree: leaves are single vertices, internal
// nodes combine their two children by disjoint union or join. Leaf labels are
// carried for reporting; the realized graph is always numbered by leaf order.
struct ConstructionTree {
  enum class Kind { leaf, disjoint_union, join };

  Kind kind = Kind::leaf;
  int label = -1;  // leaves only
  std::unique_ptr<ConstructionTree> left, right;

  bool is_leaf() const { return kind == Kind::leaf; }

  static ConstructionTree make_leaf(int label) {
    ConstructionTree t;
    t.kind = Kind::leaf;
    t.label = label;
    return t;
  }
  static ConstructionTree make_union(ConstructionTree l, ConstructionTree r) {
    return make_node(Kind::disjoint_union, std::move(l), std::move(r));
  }
  static ConstructionTree make_join(ConstructionTree l, ConstructionTree r) {
    return make_node(Kind::join, std::move(l), std::move(r));
  }

  ConstructionTree clone() const {
    ConstructionTree t;
    t.kind = kind;
    t.label = label;
    if (left) t.left = std::make_unique<ConstructionTree>(left->clone());
    if (right) t.right = std::make_unique<ConstructionTree>(right->clone());
    return t;
  }

 private:
  static ConstructionTree make_node(Kind k, ConstructionTree l, ConstructionTree r) {
    ConstructionTree t;
    t.kind = k;
    t.left = std::make_unique<ConstructionTree>(std::move(l));
    t.right = std::make_unique<ConstructionTree>(std::move(r));
    return t;
  }
};

inline int leaf_count(const ConstructionTree& t) {
  return t.is_leaf() ? 1 : leaf_count(*t.left) + leaf_count(*t.right);
}

// Carried labels in leaf order (left subtree first).
inline std::vector<int> leaf_labels(const ConstructionTree& t) {
  if (t.is_leaf()) return {t.label};
  std::vector<int> out = leaf_labels(*t.left);
  std::vector<int> r = leaf_labels(*t.right);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

// Realizes the tree; vertex i of the result is the i-th leaf in leaf order.
inline Graph from_construction_tree(const ConstructionTree& t) {
  if (t.is_leaf()) return Graph(1);
  Graph l = from_construction_tree(*t.left);
  Graph r = from_construction_tree(*t.right);
  return t.kind == ConstructionTree::Kind::join ? join(l, r) : disjoint_union(l, r);
}

// A construction tree builds a threshold graph exactly when every internal
// node has at least one leaf child (each step adds one isolated or dominating
// vertex).
inline bool is_threshold_tree(const ConstructionTree& t) {
  if (t.is_leaf()) return true;
  if (!t.left->is_leaf() && !t.right->is_leaf()) return false;
  return is_threshold_tree(*t.left) && is_threshold_tree(*t.right);
}

inline std::string to_string(const ConstructionTree& t) {
  if (t.is_leaf()) return std::to_string(t.label);
  const char* op = t.kind == ConstructionTree::Kind::join ? " v " : " u ";
  return "(" + to_string(*t.left) + op + to_string(*t.right) + ")";
}

}  // namespace forcinglab
