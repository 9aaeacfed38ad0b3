#include "treekummer/special.hpp"

#include <cmath>
#include <limits>

#include "treekummer/errors.hpp"

namespace treekummer {

namespace {

// Series development of P(a,x), good for x < a+1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x) by modified Lentz, good for x >= a+1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0)) throw NonPositiveInput("incomplete gamma requires a > 0");
  if (x < 0.0) throw NonPositiveInput("incomplete gamma requires x >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0)) throw NonPositiveInput("incomplete gamma requires a > 0");
  if (x < 0.0) throw NonPositiveInput("incomplete gamma requires x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double kolmogorov_tail(double lambda) {
  if (lambda <= 0.0) return 1.0;
  // below ~0.18 the alternating series needs thousands of terms; the tail
  // there is 1 to far beyond double precision
  if (lambda < 0.18) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  const double l2 = lambda * lambda;
  for (int k = 1; k <= 100; ++k) {
    const double term = sign * std::exp(-2.0 * k * k * l2);
    sum += term;
    if (std::fabs(term) < 1e-18) break;
    sign = -sign;
  }
  const double q = 2.0 * sum;
  return std::min(1.0, std::max(0.0, q));
}

double chi_square_upper_tail(double df, double x) {
  if (x <= 0.0) return 1.0;
  return regularized_gamma_q(0.5 * df, 0.5 * x);
}

}  // namespace treekummer
