#include "treekummer/verify.hpp"

#include <algorithm>
#include <cmath>

#include "treekummer/errors.hpp"
#include "treekummer/stat_tests.hpp"
#include "treekummer/transform.hpp"

namespace treekummer {

namespace {

// log-uniform positive vector, the kind of point the identity suites probe
std::vector<double> random_point(Rng& rng, int p, double lo, double hi) {
  std::vector<double> s(p);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < p; ++i) {
    s[i] = std::exp(llo + (lhi - llo) * rng.uniform());
  }
  return s;
}

double max_component_rel_err(std::span<const double> got, std::span<const double> want) {
  double worst = 0.0;
  for (size_t i = 0; i < got.size(); ++i) {
    worst = std::max(worst, std::fabs(got[i] - want[i]) / want[i]);
  }
  return worst;
}

}  // namespace

double numeric_log_abs_det_jacobian(const ParamMatrix& c, int root,
                                    std::span<const double> y, double rel_step) {
  const int p = c.tree().size();
  const DirectedTree dt = root_tree(c.tree(), root);
  std::vector<double> jac(static_cast<size_t>(p) * p);
  std::vector<double> yp(y.begin(), y.end());
  for (int j = 0; j < p; ++j) {
    const double h = rel_step * y[j];
    yp[j] = y[j] + h;
    const std::vector<double> up = phi_inverse(c, dt, yp);
    yp[j] = y[j] - h;
    const std::vector<double> dn = phi_inverse(c, dt, yp);
    yp[j] = y[j];
    for (int i = 0; i < p; ++i) {
      jac[static_cast<size_t>(i) * p + j] = (up[i] - dn[i]) / (2.0 * h);
    }
  }
  // LU with partial pivoting, accumulating log |pivot|
  double log_det = 0.0;
  for (int k = 0; k < p; ++k) {
    int pivot = k;
    for (int i = k + 1; i < p; ++i) {
      if (std::fabs(jac[static_cast<size_t>(i) * p + k]) >
          std::fabs(jac[static_cast<size_t>(pivot) * p + k])) {
        pivot = i;
      }
    }
    if (pivot != k) {
      for (int j = 0; j < p; ++j) {
        std::swap(jac[static_cast<size_t>(k) * p + j],
                  jac[static_cast<size_t>(pivot) * p + j]);
      }
    }
    const double pk = jac[static_cast<size_t>(k) * p + k];
    log_det += std::log(std::fabs(pk));
    for (int i = k + 1; i < p; ++i) {
      const double factor = jac[static_cast<size_t>(i) * p + k] / pk;
      for (int j = k; j < p; ++j) {
        jac[static_cast<size_t>(i) * p + j] -= factor * jac[static_cast<size_t>(k) * p + j];
      }
    }
  }
  return log_det;
}

VerifyReport verify_all(const TkDistribution& d, const VerifyOptions& opts) {
  const int p = d.tree().size();
  const ParamMatrix& c = d.params;
  VerifyReport report;
  Rng rng(opts.seed);

  // identity + root invariance
  {
    double worst_identity = 0.0;
    double worst_spread = 0.0;
    for (int t = 0; t < opts.identity_trials; ++t) {
      const std::vector<double> s = random_point(rng, p, 0.01, 100.0);
      for (int r = 0; r < p; ++r) {
        worst_identity = std::max(worst_identity, check_identity(c, r, s).rel_err);
      }
      worst_spread = std::max(worst_spread, check_root_invariance(c, s));
    }
    report.checks.push_back({"identity", worst_identity <= opts.tol_identity,
                             worst_identity,
                             "max rel err over roots and trials"});
    report.checks.push_back({"root-invariance", worst_spread <= opts.tol_root_spread,
                             worst_spread, "max pairwise spread of transformed sums"});
  }

  // round trips
  {
    double worst = 0.0;
    for (int t = 0; t < opts.identity_trials; ++t) {
      const std::vector<double> s = random_point(rng, p, 0.01, 100.0);
      for (int r = 0; r < p; ++r) {
        const DirectedTree dt = root_tree(d.tree(), r);
        worst = std::max(worst, max_component_rel_err(
                                    phi_inverse(c, dt, phi_forward(c, dt, s)), s));
        worst = std::max(worst, max_component_rel_err(
                                    phi_forward(c, dt, phi_inverse(c, dt, s)), s));
      }
    }
    report.checks.push_back({"round-trip", worst <= opts.tol_roundtrip, worst,
                             "max componentwise rel err both directions"});
  }

  // analytic vs finite-difference Jacobian
  {
    double worst = 0.0;
    const int trials = std::max(1, opts.identity_trials / 10);
    for (int t = 0; t < trials; ++t) {
      const std::vector<double> y = random_point(rng, p, 0.05, 20.0);
      for (int r = 0; r < p; ++r) {
        const double analytic = std::exp(log_jacobian_inverse(c, r, y));
        const double numeric = std::exp(numeric_log_abs_det_jacobian(c, r, y));
        worst = std::max(worst, std::fabs(analytic - numeric) / analytic);
      }
    }
    report.checks.push_back({"jacobian", worst <= opts.tol_jacobian, worst,
                             "max rel err vs finite differences"});
  }

  // per-coordinate GOF at every leaf root plus one internal vertex
  {
    std::vector<int> roots;
    if (p == 1) {
      roots.push_back(0);
    } else {
      roots = d.tree().leaves();
      for (int v = 0; v < p; ++v) {
        if (d.tree().degree(v) > 1) {
          roots.push_back(v);
          break;
        }
      }
    }
    double min_p = 1.0;
    bool pass = true;
    const double per_coord_level = opts.level / p;
    for (int r : roots) {
      Rng stream = rng.spawn();
      const SampleMatrix s = tk_sample(d, r, stream, opts.n_samples);
      const SampleMatrix x = transform_sample(c, r, s);
      const auto laws = component_laws(d, r);
      for (int i = 0; i < p; ++i) {
        std::vector<double> col = x.column(i);
        TestReport tr;
        if (laws[i].is_gamma()) {
          const NormalizedGamma law(laws[i].gamma());
          tr = ks_test(std::move(col), [&](double t) { return law.cdf(t); },
                       per_coord_level);
        } else {
          for (double& v : col) v *= laws[i].scale_factor;
          const NormalizedKummer law(laws[i].kummer());
          tr = ks_test_sorted(
              std::move(col),
              [&](std::span<const double> q) { return law.cdf_sorted(q); },
              per_coord_level);
        }
        min_p = std::min(min_p, *tr.p_value);
        pass = pass && !tr.reject;
      }
    }
    report.checks.push_back({"gof-components", pass, min_p,
                             "min KS p-value over roots and coordinates"});

    // independence of the transformed components (first root in the list)
    if (p >= 2) {
      Rng stream = rng.spawn();
      const SampleMatrix s = tk_sample(d, roots.front(), stream, opts.n_samples);
      const SampleMatrix x = transform_sample(c, roots.front(), s);
      const auto reports =
          independence_battery(x, opts.level, stream, opts.permutations);
      bool indep_pass = true;
      double indep_min_p = 1.0;
      for (const auto& tr : reports) {
        indep_pass = indep_pass && !tr.reject;
        if (tr.p_value) indep_min_p = std::min(indep_min_p, *tr.p_value);
      }
      report.checks.push_back({"independence", indep_pass, indep_min_p,
                               "min p-value across battery"});
    }
  }

  return report;
}

}  // namespace treekummer
