#pragma once

#include <functional>

namespace treekummer {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;  // error estimate accumulated over panels
  int panels = 0;
  bool converged = false;
};

inline constexpr double kQuadratureRelTol = 1e-10;
inline constexpr int kQuadratureMaxPanels = 10000;

// Globally adaptive 15-point Gauss-Kronrod rule on [a, b]: the panel with
// the largest error estimate is bisected until the accumulated estimate
// drops below rel_tol * |value| or the panel budget runs out.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = kQuadratureRelTol,
                           int max_panels = kQuadratureMaxPanels);

// Integral over (0, inf) through the map x = t/(1-t), dx = dt/(1-t)^2.
QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     double rel_tol = kQuadratureRelTol,
                                     int max_panels = kQuadratureMaxPanels);

}  // namespace treekummer
