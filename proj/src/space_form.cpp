#include "hof/space_form.hpp"

#include <cmath>
#include <stdexcept>

namespace hof {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSphereChartLimit = 20.0;     // in units of 1/sqrt(K)
constexpr double kHyperbolicMargin = 1e-3;     // keep off the disk boundary
}  // namespace

SpaceForm SpaceForm::euclidean() { return SpaceForm(SpaceKind::Euclidean, 0.0); }

SpaceForm SpaceForm::sphere(double curvature) {
  if (!(curvature > 0.0) || !(curvature <= 1.0))
    throw std::invalid_argument("sphere curvature must satisfy 0 < K <= 1");
  return SpaceForm(SpaceKind::Sphere, curvature);
}

SpaceForm SpaceForm::hyperbolic(double curvature) {
  if (!(curvature < 0.0))
    throw std::invalid_argument("hyperbolic curvature must be negative");
  return SpaceForm(SpaceKind::Hyperbolic, curvature);
}

SpaceForm SpaceForm::make(SpaceKind kind, double curvature) {
  switch (kind) {
    case SpaceKind::Euclidean:
      if (curvature != 0.0) throw std::invalid_argument("euclidean curvature must be 0");
      return euclidean();
    case SpaceKind::Sphere: return sphere(curvature);
    case SpaceKind::Hyperbolic: return hyperbolic(curvature);
  }
  throw std::invalid_argument("unknown space kind");
}

double SpaceForm::injectivity_radius() const {
  return kind_ == SpaceKind::Sphere ? kPi / std::sqrt(curvature_) : kInf;
}

double SpaceForm::conformal_factor(const Eigen::Vector2d& x) const {
  if (kind_ == SpaceKind::Euclidean) return 1.0;
  return 2.0 / (1.0 + curvature_ * x.squaredNorm());
}

Eigen::Vector2d SpaceForm::grad_log_conformal(const Eigen::Vector2d& x) const {
  if (kind_ == SpaceKind::Euclidean) return Eigen::Vector2d::Zero();
  return (-2.0 * curvature_ / (1.0 + curvature_ * x.squaredNorm())) * x;
}

double SpaceForm::chart_limit_radius() const {
  switch (kind_) {
    case SpaceKind::Euclidean: return kInf;
    case SpaceKind::Sphere: return kSphereChartLimit / std::sqrt(curvature_);
    case SpaceKind::Hyperbolic:
      return (1.0 - kHyperbolicMargin) / std::sqrt(-curvature_);
  }
  return kInf;
}

bool SpaceForm::inside_chart(const Eigen::Vector2d& x) const {
  return x.norm() <= chart_limit_radius();
}

double SpaceForm::distance(const Eigen::Vector2d& a, const Eigen::Vector2d& b) const {
  switch (kind_) {
    case SpaceKind::Euclidean:
      return (a - b).norm();
    case SpaceKind::Sphere: {
      // Lift to the round sphere of radius R = 1/sqrt(K) and take the
      // great-circle distance (numerically via the chord).
      const double R = 1.0 / std::sqrt(curvature_);
      auto lift = [R](const Eigen::Vector2d& x) {
        const double R2 = R * R;
        const double d = R2 + x.squaredNorm();
        return Eigen::Vector3d(2.0 * R2 * x[0] / d, 2.0 * R2 * x[1] / d,
                               R * (x.squaredNorm() - R2) / d);
      };
      const double chord = (lift(a) - lift(b)).norm();
      return 2.0 * R * std::asin(std::min(1.0, chord / (2.0 * R)));
    }
    case SpaceKind::Hyperbolic: {
      const double s = std::sqrt(-curvature_);
      const Eigen::Vector2d u = s * a, v = s * b;
      const double nu = u.squaredNorm(), nv = v.squaredNorm();
      const double arg = 1.0 + 2.0 * (u - v).squaredNorm() / ((1.0 - nu) * (1.0 - nv));
      return std::acosh(std::max(1.0, arg)) / s;
    }
  }
  return 0.0;
}

double SpaceForm::chart_radius_of_intrinsic(double rho) const {
  switch (kind_) {
    case SpaceKind::Euclidean: return rho;
    case SpaceKind::Sphere: {
      const double s = std::sqrt(curvature_);
      if (!(rho > 0.0) || !(rho < kPi / s))
        throw std::invalid_argument("sphere circle radius must lie in (0, pi/sqrt(K))");
      return std::tan(s * rho / 2.0) / s;
    }
    case SpaceKind::Hyperbolic: {
      const double s = std::sqrt(-curvature_);
      return std::tanh(s * rho / 2.0) / s;
    }
  }
  return rho;
}

double SpaceForm::intrinsic_radius_of_chart(double r) const {
  switch (kind_) {
    case SpaceKind::Euclidean: return r;
    case SpaceKind::Sphere: {
      const double s = std::sqrt(curvature_);
      return 2.0 * std::atan(s * r) / s;
    }
    case SpaceKind::Hyperbolic: {
      const double s = std::sqrt(-curvature_);
      return 2.0 * std::atanh(s * r) / s;
    }
  }
  return r;
}

std::string SpaceForm::name() const {
  switch (kind_) {
    case SpaceKind::Euclidean: return "euclidean";
    case SpaceKind::Sphere: return "sphere";
    case SpaceKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

BSquaredInterval admissible_b_interval(const SpaceForm& space) {
  BSquaredInterval iv;
  iv.hi = 1.0;
  iv.hi_imaginary = false;
  switch (space.kind()) {
    case SpaceKind::Euclidean:
      iv.lo = 0.0;
      iv.lo_open = true;  // b = eps, eps > 0
      iv.lo_imaginary = false;
      break;
    case SpaceKind::Sphere:
      iv.lo = space.curvature();
      iv.lo_open = false;
      iv.lo_imaginary = false;
      break;
    case SpaceKind::Hyperbolic:
      iv.lo = space.curvature();
      iv.lo_open = false;
      iv.lo_imaginary = true;
      break;
  }
  return iv;
}

ChartCorrection geodesic_curvature_correction(const SpaceForm& space,
                                              const Eigen::Vector2d& point,
                                              const Eigen::Vector2d& euclidean_normal) {
  if (!space.inside_chart(point))
    throw std::domain_error("curve leaves chart");
  ChartCorrection c;
  c.lambda = space.conformal_factor(point);
  c.dlog_lambda_dn = space.grad_log_conformal(point).dot(euclidean_normal);
  return c;
}

}  // namespace hof
