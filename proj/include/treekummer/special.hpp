#pragma once

namespace treekummer {

// Regularized lower incomplete gamma P(a, x) = gamma(a,x)/Gamma(a),
// and its complement Q(a, x). a > 0, x >= 0.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Tail of the Kolmogorov distribution,
//   Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2),
// truncated at 100 terms and clamped to [0,1].
double kolmogorov_tail(double lambda);

// Upper tail of the chi-square distribution with df degrees of freedom.
double chi_square_upper_tail(double df, double x);

}  // namespace treekummer
