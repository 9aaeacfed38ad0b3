#pragma once

#include <span>
#include <utility>
#include <vector>

#include "treekummer/param_matrix.hpp"
#include "treekummer/sample_matrix.hpp"
#include "treekummer/tree.hpp"

namespace treekummer {

// Directed-tree transformation
//   out_i = s_i * prod_{j child of i} (1 + (c_{i,j}/c_i) out_j),
// evaluated children-first; leaves other than the root pass through
// unchanged. Bijective on (0,inf)^p for every root.
std::vector<double> phi_forward(const ParamMatrix& c, const DirectedTree& dt,
                                std::span<const double> s);
std::vector<double> phi_forward(const ParamMatrix& c, int root,
                                std::span<const double> s);

// Inverse map: s_i = y_i / prod_{j child of i} (1 + (c_{i,j}/c_i) y_j).
std::vector<double> phi_inverse(const ParamMatrix& c, const DirectedTree& dt,
                                std::span<const double> y);
std::vector<double> phi_inverse(const ParamMatrix& c, int root,
                                std::span<const double> y);

// Log of the (positive) Jacobian determinant of the inverse map at y:
//   -sum_{i != root} log(1 + (c_{p(i),i}/c_{p(i)}) y_i).
double log_jacobian_inverse(const ParamMatrix& c, const DirectedTree& dt,
                            std::span<const double> y);
double log_jacobian_inverse(const ParamMatrix& c, int root, std::span<const double> y);

// The bivariate involution (x,y) -> (y/(1+x), x(1 + y/(1+x))); applying it
// twice gives the identity.
std::pair<double, double> involution_T(double x, double y);

// Sum over all nonempty connected subtrees S of
//   prod_{i in S} s_i c_i^(1 - deg_S(i)) * prod_{{j,k} in S} c_{j,k}.
// Brute force over the full enumeration; subject to the enumeration cap.
double subtree_sum(const ParamMatrix& c, std::span<const double> s);

struct IdentityReport {
  double lhs = 0.0;      // sum_m c_m * phi_forward(s)_m
  double rhs = 0.0;      // subtree_sum
  double rel_err = 0.0;  // |lhs - rhs| / rhs
};

// Checks the transformed-sum / subtree-sum identity for one root.
IdentityReport check_identity(const ParamMatrix& c, int root, std::span<const double> s);

// Max pairwise relative spread of sum_i c_i phi_forward(s)_i over all roots.
double check_root_invariance(const ParamMatrix& c, std::span<const double> s);

// phi_forward applied row by row.
SampleMatrix transform_sample(const ParamMatrix& c, int root, const SampleMatrix& m);

}  // namespace treekummer
