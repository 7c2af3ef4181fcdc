#pragma once

#include <Eigen/Dense>

#include "hof/curve.hpp"

namespace hof {

// Normal component of the L^2 gradient of F_m, oriented along the curve's
// unit normal (curve_frames normal / lambda).

// Analytic Euler-Lagrange field for m = 1 on curves in a space form of
// curvature K:  E_1 = kappa - kappa^3 - 2 kappa'' - 2 K kappa.
// The constants are pinned by the first-variation contract; see README.
Eigen::ArrayXd euler_lagrange_m1(const DiscreteCurve& curve);

struct DiscreteGradientResult {
  Eigen::ArrayXd field;
  double h_fd = 0.0;
  double richardson_inconsistency = 0.0;  // three-point h vs h/2 disagreement
};

// Central difference quotients of the energy under per-vertex hat
// variations of metric amplitude h_fd, normalized by the vertex weights.
// h_fd <= 0 selects the default 1e-5 * L / N.
DiscreteGradientResult discrete_gradient(const DiscreteCurve& curve, int m,
                                         double h_fd = -1.0);

struct GradientConsistencyReport {
  double error = 0.0;       // weighted-L2, relative unless absolute_mode
  bool absolute_mode = false;
  double field_scale = 0.0;  // ||E_discrete||_{L2,w}
};

// Compares euler_lagrange_m1 against discrete_gradient on one curve.
GradientConsistencyReport gradient_consistency(const DiscreteCurve& curve);

struct GradientLadderReport {
  std::vector<int> sizes;
  std::vector<double> errors;
  double order = 0.0;  // measured convergence order across the ladder
};

// Runs gradient_consistency on the documented perturbed-circle family at
// the given resolutions (same smooth curve sampled at each N).
GradientLadderReport gradient_consistency_ladder(const SpaceForm& space,
                                                 std::uint64_t seed,
                                                 const std::vector<int>& sizes);

}  // namespace hof
