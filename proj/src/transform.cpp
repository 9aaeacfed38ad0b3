#include "treekummer/transform.hpp"

#include <cmath>
#include <string>

#include "treekummer/errors.hpp"

namespace treekummer {

namespace {

void require_positive(std::span<const double> v, const char* what) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0) || !std::isfinite(v[i])) {
      throw NonPositiveInput(std::string(what) + "[" + std::to_string(i) +
                             "] must be positive and finite");
    }
  }
}

void require_size(const ParamMatrix& c, std::span<const double> v) {
  if (static_cast<int>(v.size()) != c.tree().size()) {
    throw LengthMismatch("vector length " + std::to_string(v.size()) +
                         " does not match tree size " + std::to_string(c.tree().size()));
  }
}

}  // namespace

std::vector<double> phi_forward(const ParamMatrix& c, const DirectedTree& dt,
                                std::span<const double> s) {
  require_size(c, s);
  require_positive(s, "s");
  std::vector<double> out(s.begin(), s.end());
  for (int i : dt.depth_order) {
    double prod = 1.0;
    for (int j : dt.children[i]) {
      prod *= 1.0 + (c.edge(i, j) / c.diag(i)) * out[j];
    }
    out[i] = s[i] * prod;
  }
  return out;
}

std::vector<double> phi_forward(const ParamMatrix& c, int root,
                                std::span<const double> s) {
  return phi_forward(c, root_tree(c.tree(), root), s);
}

std::vector<double> phi_inverse(const ParamMatrix& c, const DirectedTree& dt,
                                std::span<const double> y) {
  require_size(c, y);
  require_positive(y, "y");
  std::vector<double> out(y.size());
  for (int i = 0; i < static_cast<int>(y.size()); ++i) {
    double prod = 1.0;
    for (int j : dt.children[i]) {
      prod *= 1.0 + (c.edge(i, j) / c.diag(i)) * y[j];
    }
    out[i] = y[i] / prod;
  }
  return out;
}

std::vector<double> phi_inverse(const ParamMatrix& c, int root,
                                std::span<const double> y) {
  return phi_inverse(c, root_tree(c.tree(), root), y);
}

double log_jacobian_inverse(const ParamMatrix& c, const DirectedTree& dt,
                            std::span<const double> y) {
  require_size(c, y);
  require_positive(y, "y");
  double log_jac = 0.0;
  for (int i = 0; i < static_cast<int>(y.size()); ++i) {
    if (i == dt.root) continue;
    const int p = dt.parent[i];
    log_jac -= std::log1p((c.edge(p, i) / c.diag(p)) * y[i]);
  }
  return log_jac;
}

double log_jacobian_inverse(const ParamMatrix& c, int root, std::span<const double> y) {
  return log_jacobian_inverse(c, root_tree(c.tree(), root), y);
}

std::pair<double, double> involution_T(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw NonPositiveInput("involution needs x > 0 and y > 0");
  }
  const double u = y / (1.0 + x);
  const double v = x * (1.0 + u);
  return {u, v};
}

double subtree_sum(const ParamMatrix& c, std::span<const double> s) {
  require_size(c, s);
  require_positive(s, "s");
  double total = 0.0;
  for (const Subtree& st : enumerate_subtrees(c.tree())) {
    double term = 1.0;
    for (int v : st.vertices) term *= s[v] * c.diag(v);
    for (auto [j, k] : st.edges) {
      // each edge endpoint gains one degree, cancelling a diagonal factor
      term *= c.edge(j, k) / (c.diag(j) * c.diag(k));
    }
    total += term;
  }
  return total;
}

IdentityReport check_identity(const ParamMatrix& c, int root, std::span<const double> s) {
  IdentityReport report;
  const std::vector<double> transformed = phi_forward(c, root, s);
  for (int i = 0; i < c.tree().size(); ++i) {
    report.lhs += c.diag(i) * transformed[i];
  }
  report.rhs = subtree_sum(c, s);
  report.rel_err = std::fabs(report.lhs - report.rhs) / report.rhs;
  return report;
}

SampleMatrix transform_sample(const ParamMatrix& c, int root, const SampleMatrix& m) {
  const DirectedTree dt = root_tree(c.tree(), root);
  SampleMatrix out = m;
  for (int r = 0; r < m.rows; ++r) {
    const std::vector<double> y = phi_forward(c, dt, m.row(r));
    for (int i = 0; i < m.cols; ++i) out.at(r, i) = y[i];
  }
  return out;
}

double check_root_invariance(const ParamMatrix& c, std::span<const double> s) {
  const int p = c.tree().size();
  double lo = 0.0, hi = 0.0;
  for (int r = 0; r < p; ++r) {
    const std::vector<double> transformed = phi_forward(c, r, s);
    double sum = 0.0;
    for (int i = 0; i < p; ++i) sum += c.diag(i) * transformed[i];
    if (r == 0) {
      lo = hi = sum;
    } else {
      lo = std::min(lo, sum);
      hi = std::max(hi, sum);
    }
  }
  return lo > 0.0 ? (hi - lo) / lo : 0.0;
}

}  // namespace treekummer
