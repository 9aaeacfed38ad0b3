#pragma once

#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "treekummer/param_matrix.hpp"
#include "treekummer/rng.hpp"
#include "treekummer/sample_matrix.hpp"
#include "treekummer/scalar_dists.hpp"
#include "treekummer/tree.hpp"

namespace treekummer {

// The tree-indexed Kummer-type distribution TK(a, C): a positive shape a_i
// per vertex and a parameter matrix C over the tree. Its log density (up to
// normalization) is sum_i (a_i - 1) ln s_i minus the subtree sum of C-terms,
// which by the transformed-sum identity equals sum_i c_i * phi_forward(s)_i
// for any root.
struct TkDistribution {
  std::vector<double> shape;  // a_i
  ParamMatrix params;         // C

  TkDistribution(std::vector<double> a, ParamMatrix c);
  const Tree& tree() const { return params.tree(); }
};

// Predicted law of one coordinate of phi_forward applied to a TK sample:
// Gamma(a_r, c_r) at the root; elsewhere the coordinate scaled by
// c_{p(i),i}/c_{p(i)} is Kummer(a_i, a_{p(i)} - a_i, c_{p(i)} c_i / c_{p(i),i}).
struct ComponentLaw {
  int vertex;
  double scale_factor;  // multiplier applied to the coordinate
  std::variant<GammaParams, KummerParams> law;

  ComponentLaw(int v, double scale, GammaParams g)
      : vertex(v), scale_factor(scale), law(g) {}
  ComponentLaw(int v, double scale, KummerParams k)
      : vertex(v), scale_factor(scale), law(k) {}

  bool is_gamma() const { return std::holds_alternative<GammaParams>(law); }
  const GammaParams& gamma() const { return std::get<GammaParams>(law); }
  const KummerParams& kummer() const { return std::get<KummerParams>(law); }
};

std::vector<ComponentLaw> component_laws(const TkDistribution& d, int root);

// log density up to the (intractable) normalizing constant; the exponent is
// evaluated through phi_forward rather than the exponential-cost subtree sum.
double tk_log_density_unnorm(const TkDistribution& d, std::span<const double> s);

// TK(a, c*C): every entry of C multiplied by c. Under the *unscaled*
// transformation the component rates all pick up the factor c while shapes
// and scale factors stay put.
TkDistribution scale_params(const TkDistribution& d, double c);

// Normalized log density, assembled through the change of variables for a
// fixed root: sum of normalized component log densities at phi_forward(s)
// minus the log Jacobian of the inverse map. Caches the per-component
// normalizing constants, which cost one quadrature each.
class TkDensity {
 public:
  TkDensity(const TkDistribution& d, int root);

  int root() const { return dt_.root; }
  double log_density(std::span<const double> s) const;

 private:
  ParamMatrix params_;
  DirectedTree dt_;
  std::vector<double> scales_;
  std::vector<std::unique_ptr<NormalizedKummer>> kummer_;  // null at root
  std::unique_ptr<NormalizedGamma> root_gamma_;
};

double tk_log_density(const TkDistribution& d, int root, std::span<const double> s);

// Exact sampler: draws the independent transformed components from their
// predicted laws (undoing the scale factors) and maps them back through
// phi_inverse. The output law does not depend on the chosen root.
SampleMatrix tk_sample(const TkDistribution& d, int root, Rng& rng, int n);

}  // namespace treekummer
