#pragma once

#include <span>
#include <vector>

#include "treekummer/tree.hpp"

namespace treekummer {

// Symmetric parameter matrix attached to a tree: a positive c_i per vertex
// and a positive c_{i,j} per edge (zero off edges, never stored).
class ParamMatrix {
 public:
  // edge_values must align with tree.edges().
  ParamMatrix(Tree tree, std::vector<double> diag, std::vector<double> edge_values);

  const Tree& tree() const { return tree_; }
  double diag(int v) const { return diag_[v]; }
  const std::vector<double>& diag_values() const { return diag_; }
  // unordered lookup; throws VertexOutOfRange if {i,j} is not an edge
  double edge(int i, int j) const;
  const std::vector<double>& edge_values() const { return edge_values_; }

  ParamMatrix scaled(double factor) const;

 private:
  Tree tree_;
  std::vector<double> diag_;
  std::vector<double> edge_values_;
  // per-vertex (neighbor, value) pairs for O(deg) lookup
  std::vector<std::vector<std::pair<int, double>>> lookup_;
};

}  // namespace treekummer
