#include "treekummer/param_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "treekummer/errors.hpp"

namespace treekummer {

ParamMatrix::ParamMatrix(Tree tree, std::vector<double> diag,
                         std::vector<double> edge_values)
    : tree_(std::move(tree)), diag_(std::move(diag)), edge_values_(std::move(edge_values)) {
  const int p = tree_.size();
  if (static_cast<int>(diag_.size()) != p) {
    throw LengthMismatch("c_diag has " + std::to_string(diag_.size()) +
                         " entries for a tree of size " + std::to_string(p));
  }
  if (edge_values_.size() != tree_.edges().size()) {
    throw LengthMismatch("c_edge has " + std::to_string(edge_values_.size()) +
                         " entries for " + std::to_string(tree_.edges().size()) +
                         " edges");
  }
  for (int v = 0; v < p; ++v) {
    if (!(diag_[v] > 0.0) || !std::isfinite(diag_[v])) {
      throw NonPositiveInput("c_diag[" + std::to_string(v) + "] must be positive");
    }
  }
  lookup_.assign(p, {});
  for (size_t e = 0; e < edge_values_.size(); ++e) {
    if (!(edge_values_[e] > 0.0) || !std::isfinite(edge_values_[e])) {
      auto [i, j] = tree_.edges()[e];
      throw NonPositiveInput("c_edge on {" + std::to_string(i) + "," +
                             std::to_string(j) + "} must be positive");
    }
    auto [i, j] = tree_.edges()[e];
    lookup_[i].emplace_back(j, edge_values_[e]);
    lookup_[j].emplace_back(i, edge_values_[e]);
  }
}

double ParamMatrix::edge(int i, int j) const {
  if (i < 0 || i >= tree_.size() || j < 0 || j >= tree_.size()) {
    throw VertexOutOfRange("edge lookup outside vertex range");
  }
  for (const auto& [nbr, value] : lookup_[i]) {
    if (nbr == j) return value;
  }
  throw VertexOutOfRange("{" + std::to_string(i) + "," + std::to_string(j) +
                         "} is not an edge of the tree");
}

ParamMatrix ParamMatrix::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw NonPositiveScale("scale factor must be positive");
  }
  std::vector<double> diag = diag_;
  std::vector<double> edges = edge_values_;
  for (double& d : diag) d *= factor;
  for (double& e : edges) e *= factor;
  return ParamMatrix(tree_, std::move(diag), std::move(edges));
}

}  // namespace treekummer
