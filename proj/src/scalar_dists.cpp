#include "treekummer/scalar_dists.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "treekummer/errors.hpp"
#include "treekummer/quadrature.hpp"
#include "treekummer/special.hpp"

namespace treekummer {

namespace {

constexpr double kNormRelTolTarget = 1e-12;  // what the quadrature aims for
constexpr double kNormRelTolAccept = 1e-10;  // what counts as converged

// Location of the interior maximum of the Kummer log density, from
// d/dx [(a-1) ln x - m ln(1+x) - g x] = 0, i.e. the positive root of
// g x^2 + (m + g - a + 1) x - (a - 1) = 0. Returns 0 when there is none.
double kummer_log_density_peak(const KummerParams& p) {
  const double m = p.alpha + p.beta;
  const double b = m + p.gamma - (p.alpha - 1.0);
  const double c = -(p.alpha - 1.0);
  const double disc = b * b - 4.0 * p.gamma * c;
  if (disc <= 0.0) return 0.0;
  const double root = (-b + std::sqrt(disc)) / (2.0 * p.gamma);
  return root > 0.0 ? root : 0.0;
}

}  // namespace

KummerParams::KummerParams(double a, double b, double g) : alpha(a), beta(b), gamma(g) {
  if (!(a > 0.0) || !std::isfinite(a) || !(g > 0.0) || !std::isfinite(g) ||
      !std::isfinite(b)) {
    throw NonPositiveInput("Kummer parameters need alpha > 0, gamma > 0, finite beta");
  }
}

GammaParams::GammaParams(double a, double g) : alpha(a), gamma(g) {
  if (!(a > 0.0) || !std::isfinite(a) || !(g > 0.0) || !std::isfinite(g)) {
    throw NonPositiveInput("Gamma parameters need alpha > 0 and gamma > 0");
  }
}

double kummer_log_density_unnorm(const KummerParams& p, double x) {
  if (!(x > 0.0)) throw NonPositiveInput("Kummer density needs x > 0");
  return (p.alpha - 1.0) * std::log(x) - (p.alpha + p.beta) * std::log1p(x) -
         p.gamma * x;
}

double gamma_log_density_unnorm(const GammaParams& p, double x) {
  if (!(x > 0.0)) throw NonPositiveInput("Gamma density needs x > 0");
  return (p.alpha - 1.0) * std::log(x) - p.gamma * x;
}

NormalizedKummer::NormalizedKummer(KummerParams p) : p_(p) {
  const double m = p_.alpha + p_.beta;
  // scale everything by the density peak so exp() stays in range
  double log_peak = 0.0;
  const double xs = kummer_log_density_peak(p_);
  if (xs > 0.0) log_peak = kummer_log_density_unnorm(p_, xs);
  if (p_.alpha >= 1.0) {
    log_peak = std::max(log_peak, kummer_log_density_unnorm(p_, 1e-8));
  }

  double value = 0.0;
  double abs_err = 0.0;
  if (p_.alpha < 1.0) {
    // integrable singularity at 0: substitute u = x^alpha on (0,1), where
    // the remaining factor h(x) = (1+x)^-m e^(-gamma x) is smooth
    const double inv_alpha = 1.0 / p_.alpha;
    auto left = integrate(
        [&](double u) {
          const double x = std::pow(u, inv_alpha);
          return inv_alpha * std::exp(-m * std::log1p(x) - p_.gamma * x - log_peak);
        },
        0.0, 1.0, kNormRelTolTarget, kQuadratureMaxPanels / 2);
    auto right = integrate_half_line(
        [&](double w) {
          return std::exp(kummer_log_density_unnorm(p_, 1.0 + w) - log_peak);
        },
        kNormRelTolTarget, kQuadratureMaxPanels / 2);
    value = left.value + right.value;
    abs_err = left.abs_error + right.abs_error;
  } else {
    auto whole = integrate_half_line(
        [&](double x) { return std::exp(kummer_log_density_unnorm(p_, x) - log_peak); },
        kNormRelTolTarget, kQuadratureMaxPanels);
    value = whole.value;
    abs_err = whole.abs_error;
  }

  if (!(value > 0.0) || !std::isfinite(value) || abs_err > kNormRelTolAccept * value) {
    throw QuadratureNotConverged(
        "Kummer normalization did not reach relative error 1e-10 (alpha=" +
        std::to_string(p_.alpha) + ", beta=" + std::to_string(p_.beta) +
        ", gamma=" + std::to_string(p_.gamma) + ")");
  }
  log_norm_ = log_peak + std::log(value);
  norm_rel_err_ = abs_err / value;
}

double NormalizedKummer::log_density(double x) const {
  return kummer_log_density_unnorm(p_, x) - log_norm_;
}

// Mass of the normalized density on (a, b); the alpha < 1 singular piece is
// handled by the same u = x^alpha substitution as the normalization.
double NormalizedKummer::segment_mass(double a, double b) const {
  if (b <= a) return 0.0;
  const double m = p_.alpha + p_.beta;
  double mass = 0.0;
  if (p_.alpha < 1.0 && a < 1.0) {
    const double cut = std::min(b, 1.0);
    const double inv_alpha = 1.0 / p_.alpha;
    auto res = integrate(
        [&](double u) {
          const double x = std::pow(u, inv_alpha);
          return inv_alpha * std::exp(-m * std::log1p(x) - p_.gamma * x - log_norm_);
        },
        std::pow(a, p_.alpha), std::pow(cut, p_.alpha), 1e-10, 200);
    mass += res.value;
    a = cut;
  }
  if (b > a) {
    auto res = integrate([&](double x) { return std::exp(log_density(x)); }, a, b,
                         1e-10, 400);
    mass += res.value;
  }
  return mass;
}

double NormalizedKummer::cdf(double x) const {
  if (!(x > 0.0)) throw NonPositiveInput("Kummer CDF needs x > 0");
  // split at the peak to keep the adaptive rule honest on long tails
  const double peak = std::max(kummer_log_density_peak(p_), 1.0);
  double f = x <= peak ? segment_mass(0.0, x)
                       : segment_mass(0.0, peak) + segment_mass(peak, x);
  return std::min(1.0, std::max(0.0, f));
}

std::vector<double> NormalizedKummer::cdf_sorted(std::span<const double> sorted_xs) const {
  std::vector<double> out(sorted_xs.size());
  double running = 0.0;
  double prev = 0.0;
  for (size_t i = 0; i < sorted_xs.size(); ++i) {
    running += segment_mass(prev, sorted_xs[i]);
    prev = sorted_xs[i];
    out[i] = std::min(1.0, std::max(0.0, running));
  }
  return out;
}

NormalizedGamma::NormalizedGamma(GammaParams p)
    : p_(p), log_norm_(std::lgamma(p.alpha) - p.alpha * std::log(p.gamma)) {}

double NormalizedGamma::log_density(double x) const {
  return gamma_log_density_unnorm(p_, x) - log_norm_;
}

double NormalizedGamma::cdf(double x) const {
  if (!(x > 0.0)) throw NonPositiveInput("Gamma CDF needs x > 0");
  return regularized_gamma_p(p_.alpha, p_.gamma * x);
}

namespace {

// log sup_x x^d (1+x)^-m over (0,inf), for 0 <= d <= m. Zero at both ends
// of the d range (the sup sits at x = d/(m-d), drifting to infinity as
// d -> m).
double log_power_envelope(double d, double m) {
  if (d <= 0.0 || d >= m) return 0.0;
  const double xs = d / (m - d);
  return d * std::log(xs) - m * std::log1p(xs);
}

}  // namespace

KummerSampler::KummerSampler(KummerParams p) : p_(p), m_(p.alpha + p.beta) {
  if (m_ < 0.0) {
    proposal_shape_ = p_.alpha;
    proposal_rate_ = 0.5 * p_.gamma;
    const double mm = -m_;
    const double xs = std::max(0.0, 2.0 * mm / p_.gamma - 1.0);
    log_envelope_ = mm * std::log1p(xs) - 0.5 * p_.gamma * xs;
    return;
  }
  proposal_rate_ = p_.gamma;
  if (m_ == 0.0) {
    proposal_shape_ = p_.alpha;
    log_envelope_ = 0.0;
    return;
  }
  // pick the proposal shape maximizing the acceptance rate
  //   q(a') = a' ln(gamma) - lgamma(a') - log M(alpha - a')
  const double lo = p_.alpha > m_ ? p_.alpha - m_ : 1e-6 * p_.alpha;
  const double hi = p_.alpha;
  auto q = [&](double ap) {
    return ap * std::log(p_.gamma) - std::lgamma(ap) -
           log_power_envelope(p_.alpha - ap, m_);
  };
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double q1 = q(x1), q2 = q(x2);
  for (int it = 0; it < 80; ++it) {
    if (q1 < q2) {
      a = x1;
      x1 = x2;
      q1 = q2;
      x2 = a + gr * (b - a);
      q2 = q(x2);
    } else {
      b = x2;
      x2 = x1;
      q2 = q1;
      x1 = b - gr * (b - a);
      q1 = q(x1);
    }
  }
  double best = 0.5 * (a + b);
  double qbest = q(best);
  for (double cand : {lo, hi}) {
    if (q(cand) > qbest) {
      best = cand;
      qbest = q(cand);
    }
  }
  proposal_shape_ = best;
  log_envelope_ = log_power_envelope(p_.alpha - best, m_);
}

double KummerSampler::operator()(Rng& rng, SamplerStats* stats) const {
  const double d = p_.alpha - proposal_shape_;
  for (;;) {
    const double x = rng.gamma(proposal_shape_, proposal_rate_);
    if (stats) ++stats->proposals;
    double log_accept;
    if (m_ < 0.0) {
      log_accept = -m_ * std::log1p(x) - 0.5 * p_.gamma * x - log_envelope_;
    } else {
      log_accept = d * std::log(x) - m_ * std::log1p(x) - log_envelope_;
    }
    if (std::log(rng.uniform()) < log_accept) {
      if (stats) ++stats->accepted;
      return x;
    }
  }
}

double KummerSampler::analytic_acceptance(double log_norm_const) const {
  const double log_proposal_norm =
      std::lgamma(proposal_shape_) - proposal_shape_ * std::log(proposal_rate_);
  return std::exp(log_norm_const - log_proposal_norm - log_envelope_);
}

std::vector<double> kummer_sample(const KummerParams& p, Rng& rng, int n,
                                  SamplerStats* stats) {
  if (n < 1) throw NonPositiveInput("sample count must be >= 1");
  KummerSampler sampler(p);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = sampler(rng, stats);
  return out;
}

std::vector<double> gamma_sample(const GammaParams& p, Rng& rng, int n) {
  if (n < 1) throw NonPositiveInput("sample count must be >= 1");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = rng.gamma(p.alpha, p.gamma);
  return out;
}

}  // namespace treekummer
