#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hof/frenet.hpp"
#include "hof/variation.hpp"

using namespace hof;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("analytic E_1 on circles") {
  SUBCASE("unit euclidean circle is stationary") {
    const DiscreteCurve c = make_circle(SpaceForm::euclidean(), 1.0, 256);
    CHECK(euler_lagrange_m1(c).abs().maxCoeff() <= 1e-6);
  }
  SUBCASE("euclidean circle radius r: |E_1| = |r^2 - 1| / r^3") {
    for (double r : {0.8, 1.5, 2.0}) {
      const DiscreteCurve c = make_circle(SpaceForm::euclidean(), r, 256);
      const Eigen::ArrayXd e = euler_lagrange_m1(c);
      const double expect = std::abs(r * r - 1.0) / (r * r * r);
      CHECK(e.abs().maxCoeff() == doctest::Approx(expect).epsilon(1e-5));
      CHECK(e.abs().minCoeff() == doctest::Approx(expect).epsilon(1e-5));
    }
  }
  SUBCASE("great circle annihilates every term") {
    const DiscreteCurve c = make_circle(SpaceForm::sphere(1.0), kPi / 2.0, 256);
    CHECK(euler_lagrange_m1(c).abs().maxCoeff() <= 1e-6);
  }
  SUBCASE("hyperbolic stationary circle at coth(rho) = sqrt(3)") {
    const double rho = std::atanh(1.0 / std::sqrt(3.0));
    const DiscreteCurve c = make_circle(SpaceForm::hyperbolic(-1.0), rho, 256);
    CHECK(euler_lagrange_m1(c).abs().maxCoeff() <= 1e-6);
  }
  SUBCASE("spherical circle field matches the radial reduction") {
    // F_1(rho) = 2 pi / sin(rho) on the unit sphere, so
    // E_1 = -cos(rho)/sin^3(rho).
    const double rho = 1.0;
    const DiscreteCurve c = make_circle(SpaceForm::sphere(1.0), rho, 256);
    const double expect = -std::cos(rho) / std::pow(std::sin(rho), 3);
    const Eigen::ArrayXd e = euler_lagrange_m1(c);
    CHECK(e.maxCoeff() == doctest::Approx(expect).epsilon(1e-5));
    CHECK(e.minCoeff() == doctest::Approx(expect).epsilon(1e-5));
  }
}

TEST_CASE("discrete gradient") {
  SUBCASE("unit circle: field vanishes to 1e-3") {
    const DiscreteCurve c = make_circle(SpaceForm::euclidean(), 1.0, 256);
    const DiscreteGradientResult g = discrete_gradient(c, 1);
    CHECK(g.field.abs().maxCoeff() <= 1e-3);
  }
  SUBCASE("circle r = 1.5: constant field of |r^2-1|/r^3") {
    const DiscreteCurve c = make_circle(SpaceForm::euclidean(), 1.5, 256);
    const DiscreteGradientResult g = discrete_gradient(c, 1);
    const double expect = (1.5 * 1.5 - 1.0) / std::pow(1.5, 3);
    CHECK(g.field.maxCoeff() == doctest::Approx(expect).epsilon(1e-3));
    CHECK(g.field.minCoeff() == doctest::Approx(expect).epsilon(1e-3));
  }
  SUBCASE("m = 2 on the unit circle: constant field -2") {
    const DiscreteCurve c = make_circle(SpaceForm::euclidean(), 1.0, 256);
    const DiscreteGradientResult g = discrete_gradient(c, 2);
    CHECK(g.field.maxCoeff() == doctest::Approx(-2.0).epsilon(1e-3));
    CHECK(g.field.minCoeff() == doctest::Approx(-2.0).epsilon(1e-3));
  }
  SUBCASE("richardson consistency is clean at the default step") {
    const DiscreteCurve c = make_perturbed_circle(SpaceForm::euclidean(), 1.0, 0.1, 5, 7, 128);
    const DiscreteGradientResult g = discrete_gradient(c, 1);
    CHECK(g.richardson_inconsistency <= 1e-4);
  }
  SUBCASE("oversized h_fd leaves the chart") {
    const DiscreteCurve c = make_circle(SpaceForm::hyperbolic(-1.0), 7.0, 64);
    CHECK_THROWS(discrete_gradient(c, 1, 0.5));
  }
}

TEST_CASE("first-variation pairing identity") {
  // d/de F_m(curve + e V nu)|_0 = sum_i w_i E_i V_i for smooth V.
  const DiscreteCurve c = make_perturbed_circle(SpaceForm::euclidean(), 1.0, 0.1, 4, 11, 256);
  const InducedMetric m = induced_metric(c);
  const CurveFrames f = curve_frames(c, m);
  const Eigen::ArrayXd E = euler_lagrange_m1(c);

  Eigen::ArrayXd V(c.size());
  for (int i = 0; i < c.size(); ++i)
    V[i] = std::sin(4.0 * kPi * m.arclength[i] / m.total_length) + 0.3;

  const double eps = 1e-6;
  auto deformed = [&](double e) {
    DiscreteCurve d = c;
    for (int i = 0; i < c.size(); ++i) {
      const double step = e * V[i] / f.lambda[i];
      d.vertices(i, 0) += step * f.normal(i, 0);
      d.vertices(i, 1) += step * f.normal(i, 1);
    }
    return energy(d, 1);
  };
  const double lhs = (deformed(eps) - deformed(-eps)) / (2.0 * eps);
  const double rhs = (m.weights * E * V).sum();
  CHECK(lhs == doctest::Approx(rhs).epsilon(2e-4));
}

TEST_CASE("orientation covariance: reversing the ring flips E") {
  const DiscreteCurve c = make_perturbed_circle(SpaceForm::sphere(1.0), 1.0, 0.1, 4, 3, 128);
  DiscreteCurve reversed = c;
  for (int i = 0; i < c.size(); ++i)
    reversed.vertices.row(i) = c.vertices.row((c.size() - i) % c.size());
  const Eigen::ArrayXd e = euler_lagrange_m1(c);
  const Eigen::ArrayXd er = euler_lagrange_m1(reversed);
  double worst = 0.0;
  for (int i = 0; i < c.size(); ++i)
    worst = std::max(worst, std::abs(er[i] + e[(c.size() - i) % c.size()]));
  CHECK(worst <= 1e-8);
}

TEST_CASE("gradient consistency") {
  SUBCASE("perturbed circle in each ambient at N = 256") {
    for (const SpaceForm& space : {SpaceForm::euclidean(), SpaceForm::sphere(1.0),
                                   SpaceForm::hyperbolic(-1.0)}) {
      const DiscreteCurve c = make_perturbed_circle(space, 1.0, 0.1, 5, 5, 256);
      const GradientConsistencyReport rep = gradient_consistency(c);
      CHECK_FALSE(rep.absolute_mode);
      CHECK(rep.error <= 1e-3);
    }
  }
  SUBCASE("stationary circle reports absolute error") {
    const DiscreteCurve c = make_circle(SpaceForm::euclidean(), 1.0, 256);
    const GradientConsistencyReport rep = gradient_consistency(c);
    CHECK(rep.absolute_mode);
    CHECK(rep.error <= 1e-3);
  }
  SUBCASE("ladder converges at order >= 2") {
    const GradientLadderReport rep =
        gradient_consistency_ladder(SpaceForm::euclidean(), 17, {128, 256, 512});
    CHECK(rep.errors.back() <= 1e-3);
    CHECK(rep.order >= 2.0);
  }
}
