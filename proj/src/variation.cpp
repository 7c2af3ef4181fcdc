#include "hof/variation.hpp"

#include <cmath>
#include <stdexcept>

#include "hof/frenet.hpp"

namespace hof {

Eigen::ArrayXd euler_lagrange_m1(const DiscreteCurve& curve) {
  const InducedMetric metric = induced_metric(curve);
  const CurvatureJet jet = curvature_jet(curve, metric, 2);
  const double K = curve.space.curvature();
  const Eigen::ArrayXd kappa = jet.k.col(0);
  const Eigen::ArrayXd kappa2 = jet.k.col(2);
  return kappa - kappa.cube() - 2.0 * kappa2 - 2.0 * K * kappa;
}

namespace {

double energy_of_vertices(const DiscreteCurve& proto, const Eigen::ArrayX2d& verts, int m) {
  DiscreteCurve c;
  c.space = proto.space;
  c.vertices = verts;
  return energy(c, m);
}

}  // namespace

DiscreteGradientResult discrete_gradient(const DiscreteCurve& curve, int m, double h_fd) {
  const int n = curve.size();
  const InducedMetric metric = induced_metric(curve);
  const CurveFrames frames = curve_frames(curve, metric);
  if (h_fd <= 0.0) h_fd = 1e-5 * metric.total_length / n;

  DiscreteGradientResult out;
  out.h_fd = h_fd;
  out.field.resize(n);

  auto probe = [&](int i, double eps) {
    Eigen::ArrayX2d verts = curve.vertices;
    const double step = eps / frames.lambda[i];  // metric amplitude eps
    verts(i, 0) += step * frames.normal(i, 0);
    verts(i, 1) += step * frames.normal(i, 1);
    if (!curve.space.inside_chart(Eigen::Vector2d(verts(i, 0), verts(i, 1))))
      throw std::domain_error("discrete_gradient: h_fd pushes curve out of the chart");
    return energy_of_vertices(curve, verts, m);
  };

  for (int i = 0; i < n; ++i) {
    const double fp = probe(i, h_fd);
    const double fm = probe(i, -h_fd);
    out.field[i] = (fp - fm) / (2.0 * h_fd * metric.weights[i]);
  }

  // Three-point consistency guard: compare against half-step quotients at a
  // few vertices; large disagreement signals cancellation or an oversized h.
  double worst = 0.0;
  const int samples = std::min(4, n);
  for (int k = 0; k < samples; ++k) {
    const int i = (k * n) / samples;
    const double fp = probe(i, 0.5 * h_fd);
    const double fm = probe(i, -0.5 * h_fd);
    const double half = (fp - fm) / (h_fd * metric.weights[i]);
    const double scale = std::max({1.0, std::abs(out.field[i]), std::abs(half)});
    worst = std::max(worst, std::abs(half - out.field[i]) / scale);
  }
  out.richardson_inconsistency = worst;
  return out;
}

GradientConsistencyReport gradient_consistency(const DiscreteCurve& curve) {
  const Eigen::ArrayXd analytic = euler_lagrange_m1(curve);
  const DiscreteGradientResult discrete = discrete_gradient(curve, 1);
  const InducedMetric metric = induced_metric(curve);

  const Eigen::ArrayXd diff = analytic - discrete.field;
  const double err_norm = std::sqrt((metric.weights * diff.square()).sum());
  const double ref_norm = std::sqrt((metric.weights * discrete.field.square()).sum());

  GradientConsistencyReport rep;
  rep.field_scale = ref_norm;
  if (ref_norm <= 1e-6) {
    rep.absolute_mode = true;
    rep.error = err_norm;
  } else {
    rep.absolute_mode = false;
    rep.error = err_norm / ref_norm;
  }
  return rep;
}

GradientLadderReport gradient_consistency_ladder(const SpaceForm& space,
                                                 std::uint64_t seed,
                                                 const std::vector<int>& sizes) {
  GradientLadderReport rep;
  rep.sizes = sizes;
  for (int n : sizes) {
    const DiscreteCurve c = make_perturbed_circle(space, 1.0, 0.1, 5, seed, n);
    rep.errors.push_back(gradient_consistency(c).error);
  }
  if (rep.errors.size() >= 2) {
    const double e0 = rep.errors.front(), e1 = rep.errors.back();
    const double halvings = std::log2(static_cast<double>(sizes.back()) / sizes.front());
    rep.order = std::log2(e0 / e1) / halvings;
  }
  return rep;
}

}  // namespace hof
