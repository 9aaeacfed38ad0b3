#include "treekummer/tree_kummer.hpp"

#include <cmath>
#include <string>

#include "treekummer/errors.hpp"
#include "treekummer/transform.hpp"

namespace treekummer {

TkDistribution::TkDistribution(std::vector<double> a, ParamMatrix c)
    : shape(std::move(a)), params(std::move(c)) {
  if (static_cast<int>(shape.size()) != params.tree().size()) {
    throw LengthMismatch("shape vector length " + std::to_string(shape.size()) +
                         " does not match tree size " +
                         std::to_string(params.tree().size()));
  }
  for (size_t i = 0; i < shape.size(); ++i) {
    if (!(shape[i] > 0.0) || !std::isfinite(shape[i])) {
      throw NonPositiveInput("a[" + std::to_string(i) + "] must be positive");
    }
  }
}

std::vector<ComponentLaw> component_laws(const TkDistribution& d, int root) {
  const DirectedTree dt = root_tree(d.tree(), root);
  std::vector<ComponentLaw> laws;
  laws.reserve(d.tree().size());
  for (int i = 0; i < d.tree().size(); ++i) {
    if (i == root) {
      laws.emplace_back(i, 1.0, GammaParams(d.shape[i], d.params.diag(i)));
    } else {
      const int p = dt.parent[i];
      const double c_edge = d.params.edge(p, i);
      laws.emplace_back(i, c_edge / d.params.diag(p),
                        KummerParams(d.shape[i], d.shape[p] - d.shape[i],
                                     d.params.diag(p) * d.params.diag(i) / c_edge));
    }
  }
  return laws;
}

double tk_log_density_unnorm(const TkDistribution& d, std::span<const double> s) {
  // exponent via the transformed sum (root 0 is as good as any)
  const std::vector<double> transformed = phi_forward(d.params, 0, s);
  double exponent = 0.0;
  for (int i = 0; i < d.tree().size(); ++i) {
    exponent += d.params.diag(i) * transformed[i];
  }
  double log_shape = 0.0;
  for (int i = 0; i < d.tree().size(); ++i) {
    log_shape += (d.shape[i] - 1.0) * std::log(s[i]);
  }
  return log_shape - exponent;
}

TkDistribution scale_params(const TkDistribution& d, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw NonPositiveScale("scale must be positive");
  }
  return TkDistribution(d.shape, d.params.scaled(c));
}

TkDensity::TkDensity(const TkDistribution& d, int root)
    : params_(d.params), dt_(root_tree(d.tree(), root)) {
  const auto laws = component_laws(d, root);
  const int p = d.tree().size();
  scales_.resize(p);
  kummer_.resize(p);
  for (int i = 0; i < p; ++i) {
    scales_[i] = laws[i].scale_factor;
    if (laws[i].is_gamma()) {
      root_gamma_ = std::make_unique<NormalizedGamma>(laws[i].gamma());
    } else {
      kummer_[i] = std::make_unique<NormalizedKummer>(laws[i].kummer());
    }
  }
}

double TkDensity::log_density(std::span<const double> s) const {
  const std::vector<double> y = phi_forward(params_, dt_, s);
  double log_f = -log_jacobian_inverse(params_, dt_, y);
  for (int i = 0; i < static_cast<int>(y.size()); ++i) {
    if (i == dt_.root) {
      log_f += root_gamma_->log_density(y[i]);
    } else {
      // the predicted law is for the scaled coordinate w = scale * y_i
      log_f += std::log(scales_[i]) + kummer_[i]->log_density(scales_[i] * y[i]);
    }
  }
  return log_f;
}

double tk_log_density(const TkDistribution& d, int root, std::span<const double> s) {
  return TkDensity(d, root).log_density(s);
}

SampleMatrix tk_sample(const TkDistribution& d, int root, Rng& rng, int n) {
  if (n < 1) throw NonPositiveInput("sample count must be >= 1");
  const int p = d.tree().size();
  const DirectedTree dt = root_tree(d.tree(), root);
  const auto laws = component_laws(d, root);

  std::vector<KummerSampler> samplers;
  samplers.reserve(p);
  for (const auto& law : laws) {
    if (!law.is_gamma()) samplers.emplace_back(law.kummer());
  }

  SampleMatrix out;
  out.rows = n;
  out.cols = p;
  out.seed = rng.seed();
  out.data.resize(static_cast<size_t>(n) * p);

  std::vector<double> y(p);
  for (int r = 0; r < n; ++r) {
    int k = 0;
    for (int i = 0; i < p; ++i) {
      if (laws[i].is_gamma()) {
        y[i] = rng.gamma(laws[i].gamma().alpha, laws[i].gamma().gamma);
      } else {
        y[i] = samplers[k++](rng) / laws[i].scale_factor;
      }
    }
    const std::vector<double> s = phi_inverse(d.params, dt, y);
    for (int i = 0; i < p; ++i) out.at(r, i) = s[i];
  }
  return out;
}

}  // namespace treekummer
