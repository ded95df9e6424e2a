#ifndef CDG_PROBLEM_HPP
#define CDG_PROBLEM_HPP

#include <cdg/field.hpp>

#include <optional>
#include <vector>

namespace cdg {

/// One material layer of a longitudinally layered device, [lo, hi] along y.
struct Layer {
  double lo = 0.0, hi = 0.0;
  double eps = 1.0;
  double k1 = 0.0;
  double v_hat = 0.0;
  double w_hat = 0.0;
  int transverse_mult = 1; // transverse subdivisions per unit of K
};

/// Layered description kept alongside the generic fields; it is what the
/// one-dimensional reference solver consumes.
struct LayerStack {
  std::vector<Layer> layers; // ordered bottom to top, tiling [y0, y1]
  double u_lo = 0.0;         // Dirichlet value at the bottom contact
  double u_hi = 0.0;         // and at the top contact
};

/// Data of the nonlinear Poisson problem
///   -div(eps grad u) + exp(u - v_hat) - exp(w_hat - u) = k1
/// with u = u_hat on the Dirichlet part and zero Neumann flux elsewhere.
/// With linear_mode set the exponential carrier term is omitted.
struct ProblemSpec {
  ScalarField epsilon = ScalarField::constant(1.0);
  ScalarField k1 = ScalarField::constant(0.0);
  ScalarField v_hat = ScalarField::constant(0.0);
  ScalarField w_hat = ScalarField::constant(0.0);
  ScalarField u_hat = ScalarField::constant(0.0);
  bool linear_mode = false;
  double eps_min = 1.0, eps_max = 1.0;
  std::optional<LayerStack> layered;
};

/// Problem whose data are constant per layer and transversally constant.
/// Subdomain i of the grid built from the same stack is layer i.
ProblemSpec make_layered_problem(const LayerStack& stack);

} // namespace cdg

#endif
