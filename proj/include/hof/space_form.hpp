#pragma once

#include <Eigen/Dense>
#include <limits>
#include <string>

namespace hof {

enum class SpaceKind { Euclidean, Sphere, Hyperbolic };

// A 2-D constant-curvature model space presented through a single conformal
// chart: the plane (lambda = 1), the stereographic chart of the sphere
// (lambda = 2/(1 + K|x|^2)) and the Poincare disk (lambda = 2/(1 - |K||x|^2),
// |x| < 1/sqrt(|K|)).  Curvature K is restricted to K <= 1 so that an
// admissible b with K <= b^2 <= 1 always exists.
class SpaceForm {
 public:
  static SpaceForm euclidean();
  static SpaceForm sphere(double curvature);      // 0 < K <= 1
  static SpaceForm hyperbolic(double curvature);  // K < 0
  static SpaceForm make(SpaceKind kind, double curvature);

  SpaceKind kind() const { return kind_; }
  double curvature() const { return curvature_; }
  double injectivity_radius() const;  // pi/sqrt(K) on the sphere, +inf otherwise

  double conformal_factor(const Eigen::Vector2d& x) const;
  Eigen::Vector2d grad_log_conformal(const Eigen::Vector2d& x) const;

  // Chart admissibility.  Sphere: |x|*sqrt(K) <= 20 (the antipode sits at
  // chart infinity); hyperbolic: |x|*sqrt(|K|) <= 1 - margin.
  bool inside_chart(const Eigen::Vector2d& x) const;
  double chart_limit_radius() const;  // max admissible |x|

  // Closed-form geodesic distance between chart points.
  double distance(const Eigen::Vector2d& a, const Eigen::Vector2d& b) const;

  // Geodesic circles about the chart origin.
  double chart_radius_of_intrinsic(double rho) const;
  double intrinsic_radius_of_chart(double r) const;

  std::string name() const;
  bool operator==(const SpaceForm& o) const {
    return kind_ == o.kind_ && curvature_ == o.curvature_;
  }

 private:
  SpaceForm(SpaceKind kind, double curvature) : kind_(kind), curvature_(curvature) {}
  SpaceKind kind_;
  double curvature_;
};

// Admissible set {b^2 : K <= b^2 <= 1}, b positive real (b^2 > 0) or pure
// imaginary (b^2 < 0); b^2 = 0 itself is never admissible.
struct BSquaredInterval {
  double lo = 0.0;
  double hi = 1.0;
  bool lo_open = false;       // true when lo = 0 is a limit only (euclidean)
  bool lo_imaginary = false;  // lo corresponds to imaginary b
  bool hi_imaginary = false;
  bool contains(double b_squared) const {
    if (b_squared == 0.0) return false;
    if (lo_open ? (b_squared <= lo) : (b_squared < lo)) return false;
    return b_squared <= hi;
  }
};

BSquaredInterval admissible_b_interval(const SpaceForm& space);

// Conformal ingredients of the geodesic curvature at a chart point:
// kappa_g = (kappa_euclidean + dlog_lambda_dn) / lambda, where
// dlog_lambda_dn is the derivative of log(lambda) along the supplied
// Euclidean unit normal and kappa_euclidean = -<T'|n> for that normal.
struct ChartCorrection {
  double lambda;
  double dlog_lambda_dn;
};

ChartCorrection geodesic_curvature_correction(const SpaceForm& space,
                                              const Eigen::Vector2d& point,
                                              const Eigen::Vector2d& euclidean_normal);

}  // namespace hof
