#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hof/fd.hpp"
#include "hof/frenet.hpp"

using namespace hof;

namespace {
constexpr double kPi = 3.14159265358979323846;

double eval_on(const DiffPoly& p, std::initializer_list<double> jet) {
  std::vector<double> v(jet);
  v.resize(std::max<size_t>(v.size(), p.max_variable() + 1), 0.0);
  return p.evaluate(v);
}

// Independent oracle: repeated numeric covariant differentiation of the unit
// normal along the curve, using only chart positions and the ambient
// conformal Christoffels (never the curvature jet).
Eigen::ArrayXXd covariant_iterates_sq(const DiscreteCurve& curve, int max_s) {
  const InducedMetric m = induced_metric(curve);
  const CurveFrames f = curve_frames(curve, m);
  const int n = curve.size();
  const int radius = fd::stencil_radius_for(1);
  const Eigen::ArrayXd dx =
      fd::periodic_derivative(curve.vertices.col(0), m.arclength, m.total_length, 1, radius);
  const Eigen::ArrayXd dy =
      fd::periodic_derivative(curve.vertices.col(1), m.arclength, m.total_length, 1, radius);

  Eigen::ArrayX2d v(n, 2);  // chart components of the running field
  for (int i = 0; i < n; ++i) {
    v(i, 0) = f.normal(i, 0) / f.lambda[i];
    v(i, 1) = f.normal(i, 1) / f.lambda[i];
  }

  Eigen::ArrayXXd norms_sq(n, max_s + 1);
  for (int s = 0; s <= max_s; ++s) {
    for (int i = 0; i < n; ++i) {
      const double lam = f.lambda[i];
      norms_sq(i, s) = lam * lam * (v(i, 0) * v(i, 0) + v(i, 1) * v(i, 1));
    }
    if (s == max_s) break;
    const Eigen::ArrayXd dvx =
        fd::periodic_derivative(v.col(0), m.arclength, m.total_length, 1, radius);
    const Eigen::ArrayXd dvy =
        fd::periodic_derivative(v.col(1), m.arclength, m.total_length, 1, radius);
    for (int i = 0; i < n; ++i) {
      const Eigen::Vector2d g = curve.space.grad_log_conformal(curve.vertex(i));
      const double ux = g[0], uy = g[1];
      const double tx = dx[i], ty = dy[i];
      const double vx = v(i, 0), vy = v(i, 1);
      // Conformal Christoffels of lambda^2 (dx^2 + dy^2).
      const double cx = ux * (tx * vx) + uy * (tx * vy + ty * vx) - ux * (ty * vy);
      const double cy = -uy * (tx * vx) + ux * (tx * vy + ty * vx) + uy * (ty * vy);
      v(i, 0) = dvx[i] + cx;
      v(i, 1) = dvy[i] + cy;
    }
  }
  return norms_sq;
}

// Weighted-L2 relative error between the symbolic |nabla^s nu|^2 and the
// oracle, per order s.
std::vector<double> symbolic_vs_numeric_errors(const SpaceForm& space, int n, int max_s) {
  const DiscreteCurve c = make_ellipse(space, 0.8, 0.5, n);
  const InducedMetric m = induced_metric(c);
  const CurvatureJet jet = curvature_jet(c, m, std::max(0, max_s - 1));
  const Eigen::ArrayXXd oracle = covariant_iterates_sq(c, max_s);
  std::vector<double> errors;
  std::vector<double> values(jet.order + 1);
  for (int s = 1; s <= max_s; ++s) {
    const DiffPoly& p = grad_norm_sq(s);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= jet.order; ++j) values[j] = jet.k(i, j);
      const double diff = p.evaluate(values) - oracle(i, s);
      num += m.weights[i] * diff * diff;
      den += m.weights[i] * oracle(i, s) * oracle(i, s);
    }
    errors.push_back(std::sqrt(num / den));
  }
  return errors;
}

}  // namespace

TEST_CASE("frenet recursion produces the expected low-order fields") {
  const FrenetVector& d1 = frenet_normal_derivative(1);
  CHECK(d1.tangential.to_string() == "k0");
  CHECK(d1.normal.is_zero());

  const FrenetVector& d2 = frenet_normal_derivative(2);
  CHECK(eval_on(d2.tangential, {2.0, 3.0}) == doctest::Approx(3.0));      // kappa'
  CHECK(eval_on(d2.normal, {2.0, 3.0}) == doctest::Approx(-4.0));        // -kappa^2

  const FrenetVector& d3 = frenet_normal_derivative(3);
  // (kappa'' - kappa^3, -3 kappa kappa')
  CHECK(eval_on(d3.tangential, {2.0, 3.0, 5.0}) == doctest::Approx(5.0 - 8.0));
  CHECK(eval_on(d3.normal, {2.0, 3.0, 5.0}) == doctest::Approx(-18.0));
}

TEST_CASE("squared norms of the normal derivatives") {
  CHECK(eval_on(grad_norm_sq(0), {7.0}) == doctest::Approx(1.0));
  CHECK(eval_on(grad_norm_sq(1), {3.0}) == doctest::Approx(9.0));
  // m = 2: (kappa')^2 + kappa^4
  CHECK(eval_on(grad_norm_sq(2), {2.0, 3.0}) == doctest::Approx(9.0 + 16.0));
}

TEST_CASE("homogeneity grading up to s = 8") {
  for (int s = 0; s <= 8; ++s) {
    const FrenetVector& v = frenet_normal_derivative(s);
    CHECK(v.tangential.is_homogeneous(s));
    CHECK(v.normal.is_homogeneous(s));
    CHECK(grad_norm_sq(s).is_homogeneous(2 * s));
  }
}

TEST_CASE("symbolic norms match numeric covariant differentiation") {
  const auto e256 = symbolic_vs_numeric_errors(SpaceForm::euclidean(), 256, 5);
  const auto e512 = symbolic_vs_numeric_errors(SpaceForm::euclidean(), 512, 5);
  for (int s = 1; s <= 5; ++s) {
    CHECK(e512[s - 1] < 1e-3);
    CHECK(e256[s - 1] / e512[s - 1] >= 3.3);  // O(h^2): error quarters
  }
  const auto h512 = symbolic_vs_numeric_errors(SpaceForm::hyperbolic(-1.0), 512, 4);
  const auto s512 = symbolic_vs_numeric_errors(SpaceForm::sphere(1.0), 512, 4);
  for (int s = 1; s <= 4; ++s) {
    CHECK(h512[s - 1] < 1e-3);
    CHECK(s512[s - 1] < 1e-3);
  }
}

TEST_CASE("energy closed forms") {
  SUBCASE("euclidean circles: F_1 = 2 pi (r + 1/r)") {
    for (double r : {1.0, 1.5, 2.5}) {
      const DiscreteCurve c = make_circle(SpaceForm::euclidean(), r, 512);
      const double expect = 2.0 * kPi * (r + 1.0 / r);
      CHECK(energy(c, 1) == doctest::Approx(expect).epsilon(1e-5));
    }
  }
  SUBCASE("great circle: F_m = 2 pi for any m >= 1") {
    const DiscreteCurve c = make_circle(SpaceForm::sphere(1.0), kPi / 2.0, 256);
    CHECK(energy(c, 1) == doctest::Approx(2.0 * kPi).epsilon(1e-4));
    CHECK(energy(c, 2) == doctest::Approx(2.0 * kPi).epsilon(1e-4));
    CHECK(energy(c, 3) == doctest::Approx(2.0 * kPi).epsilon(1e-4));
  }
  SUBCASE("unit circle, m = 2: kappa' = 0 and kappa^4 = 1 give 4 pi") {
    const DiscreteCurve c = make_circle(SpaceForm::euclidean(), 1.0, 256);
    CHECK(energy(c, 2) == doctest::Approx(4.0 * kPi).epsilon(1e-4));
  }
  SUBCASE("energy dominates length") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      const DiscreteCurve c =
          make_perturbed_circle(SpaceForm::hyperbolic(-1.0), 1.0, 0.1, 5, seed, 128);
      const double L = induced_metric(c).total_length;
      CHECK(energy(c, 1) >= L);
      CHECK(energy(c, 2) >= L);
    }
  }
}

TEST_CASE("thresholds from the global-existence bound") {
  SUBCASE("unit sphere: forced b = 1, threshold exactly 1") {
    const SpaceForm sp = SpaceForm::sphere(1.0);
    CHECK(threshold(sp, 1.0) == 1.0);
    const ThresholdReport rep = threshold_sup(sp);
    CHECK(rep.value == 1.0);
    CHECK(rep.b_squared == 1.0);
    CHECK(rep.attained);
  }
  SUBCASE("euclidean: sup over b = eps is infinite") {
    const ThresholdReport rep = threshold_sup(SpaceForm::euclidean());
    CHECK(std::isinf(rep.value));
    CHECK_FALSE(rep.attained);
    CHECK(threshold(SpaceForm::euclidean(), 0.01) == doctest::Approx(10.0));
  }
  SUBCASE("hyperbolic: Hadamard case, sup infinite") {
    const SpaceForm hy = SpaceForm::hyperbolic(-1.0);
    CHECK(std::isinf(threshold_sup(hy).value));
    CHECK(threshold(hy, -1.0) == doctest::Approx(1.0));  // min{1/|b|, R/2} = 1
    CHECK(threshold(hy, 0.25) == doctest::Approx(2.0));
  }
  SUBCASE("sphere with K < 1: sup at b = K^{1/4}") {
    const SpaceForm sp = SpaceForm::sphere(0.25);
    const ThresholdReport rep = threshold_sup(sp);
    CHECK(rep.b_squared == doctest::Approx(0.5));
    CHECK(rep.value == doctest::Approx(std::pow(0.25, -0.25)));
  }
  SUBCASE("inadmissible b is rejected") {
    CHECK_THROWS(threshold(SpaceForm::sphere(1.0), 0.5));
    CHECK_THROWS(threshold(SpaceForm::euclidean(), -0.5));
    CHECK_THROWS(threshold(SpaceForm::euclidean(), 0.0));
  }
}

TEST_CASE("initial-condition check") {
  const DiscreteCurve circle = make_circle(SpaceForm::euclidean(), 1.0, 128);
  const InitialConditionReport ok = check_initial_condition(circle, 1);
  CHECK(ok.admissible_m);
  CHECK(ok.satisfied);

  const DiscreteCurve great = make_circle(SpaceForm::sphere(1.0), kPi / 2.0, 128);
  const InitialConditionReport no = check_initial_condition(great, 1);
  CHECK(no.F_m == doctest::Approx(2.0 * kPi).epsilon(1e-3));
  CHECK(no.threshold_sup == 1.0);
  CHECK_FALSE(no.satisfied);

  CHECK_FALSE(check_initial_condition(circle, 0).admissible_m);
}
