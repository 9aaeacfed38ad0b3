#include "treekummer/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace treekummer {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15
// constants). Nodes are the positive half; the rule is symmetric.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(center - half * kXgk[i]);
    fv[14 - i] = f(center + half * kXgk[i]);
  }
  fv[7] = f(center);

  double kronrod = kWgk[7] * fv[7];
  double gauss = kWg[3] * fv[7];
  double resabs = kWgk[7] * std::fabs(fv[7]);
  for (int i = 0; i < 7; ++i) {
    kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
    resabs += kWgk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
    if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  const double mean = kronrod * 0.5;
  double resasc = kWgk[7] * std::fabs(fv[7] - mean);
  for (int i = 0; i < 7; ++i) {
    resasc += kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));
  }

  kronrod *= half;
  gauss *= half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);

  // QUADPACK error heuristic.
  double err = std::fabs(kronrod - gauss);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(err, 50.0 * eps * resabs);
  }
  return Panel{a, b, kronrod, err};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, int max_panels) {
  QuadratureResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }

  std::priority_queue<Panel> heap;
  Panel first = evaluate_panel(f, a, b);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  res.panels = 1;

  const double abs_floor = 1e-300;
  while (total_err > std::max(rel_tol * std::fabs(total), abs_floor) &&
         res.panels < max_panels) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval exhausted at machine resolution; keep its estimate
      heap.push(Panel{worst.a, worst.b, worst.value, 0.0});
      total_err -= worst.error;
      continue;
    }
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++res.panels;
  }

  res.value = total;
  res.abs_error = total_err;
  res.converged = total_err <= std::max(rel_tol * std::fabs(total), abs_floor);
  return res;
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     double rel_tol, int max_panels) {
  auto mapped = [&f](double t) {
    const double om = 1.0 - t;
    const double x = t / om;
    return f(x) / (om * om);
  };
  // stop just short of t=1; the integrand must decay for convergence anyway
  return integrate(mapped, 0.0, 1.0 - 1e-16, rel_tol, max_panels);
}

}  // namespace treekummer
