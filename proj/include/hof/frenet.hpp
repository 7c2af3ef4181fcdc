#pragma once

#include "hof/curve.hpp"
#include "hof/diff_poly.hpp"

namespace hof {

// Covariant derivative of a field along the curve, written in the moving
// frame {T, nu}: value = tangential * T + normal * nu.  The frame obeys
// nabla_s T = -kappa nu and nabla_s nu = kappa T, so differentiation is
// exact on the symbolic level.
struct FrenetVector {
  DiffPoly tangential;
  DiffPoly normal;
  int order = 0;
};

// The unit normal itself (order 0): (0, 1).
FrenetVector frenet_unit_normal();

// One covariant arclength derivative:
// (a, b) -> (D a + kappa b, D b - kappa a).
FrenetVector frenet_derivative(const FrenetVector& v);

// nabla^s nu as a differential polynomial pair (cached per s).
const FrenetVector& frenet_normal_derivative(int s);

// |nabla^m nu|^2 = tangential^2 + normal^2; homogeneous of weight 2m.
const DiffPoly& grad_norm_sq(int m);

// F_m = sum_i w_i (1 + P_m(jet_i)); always >= curve length.
double energy(const InducedMetric& metric, const CurvatureJet& jet, int m);
double energy(const DiscreteCurve& curve, int m);

// Right-hand side of the global-existence energy bound for given admissible
// b^2 (n = 1, omega_1 = 2):
//   b real:      min{ 1/|b|, b R/pi }
//   b imaginary: min{ 1/|b|, R/2 }
double threshold(const SpaceForm& space, double b_squared);

struct ThresholdReport {
  double value = 0.0;        // sup over admissible b^2 (may be +inf)
  double b_squared = 0.0;    // optimizing b^2 (0 signals the b -> 0 limit)
  bool imaginary = false;
  bool attained = true;      // false when the sup is a limit (b -> 0)
};

ThresholdReport threshold_sup(const SpaceForm& space);

struct InitialConditionReport {
  double F_m = 0.0;
  double threshold_sup = 0.0;
  bool satisfied = false;
  bool admissible_m = false;  // m >= [n/2] + 1 = 1 for curves
};

InitialConditionReport check_initial_condition(const DiscreteCurve& curve, int m);

}  // namespace hof
