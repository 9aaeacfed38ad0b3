#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treekummer/tree_kummer.hpp"

namespace treekummer {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int identity_trials = 200;    // random points for the identity suites
  int n_samples = 20000;        // sample size for the GOF / independence runs
  double level = 1e-3;          // significance for the statistical checks
  int permutations = 200;       // dCor permutation count
  double tol_identity = 1e-12;  // transformed-sum vs subtree-sum
  double tol_root_spread = 1e-12;
  double tol_roundtrip = 1e-12;
  double tol_jacobian = 1e-6;  // analytic vs finite-difference determinant
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;  // the measured quantity (max error, min p-value, ...)
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

// Full verification battery for one TK spec: the transformed-sum identity and
// its root invariance, forward/inverse round trips, the analytic Jacobian
// against central finite differences, per-coordinate GOF of the transformed
// sample against the predicted component laws for every leaf root plus one
// internal root, and the pairwise independence battery.
VerifyReport verify_all(const TkDistribution& d, const VerifyOptions& opts);

// log |det| of the central-finite-difference Jacobian of phi_inverse at y
// (step rel_step * y_j per column). Cross-check for log_jacobian_inverse.
double numeric_log_abs_det_jacobian(const ParamMatrix& c, int root,
                                    std::span<const double> y,
                                    double rel_step = 1e-6);

}  // namespace treekummer
