#include "hof/frenet.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hof {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
}

FrenetVector frenet_unit_normal() {
  FrenetVector v;
  v.tangential = DiffPoly();
  v.normal = DiffPoly::constant(1);
  v.order = 0;
  return v;
}

FrenetVector frenet_derivative(const FrenetVector& v) {
  const DiffPoly kappa = DiffPoly::kappa(0);
  FrenetVector d;
  d.tangential = v.tangential.arclength_derivative() + kappa * v.normal;
  d.normal = v.normal.arclength_derivative() - kappa * v.tangential;
  d.order = v.order + 1;
  return d;
}

const FrenetVector& frenet_normal_derivative(int s) {
  static std::vector<FrenetVector> cache{frenet_unit_normal()};
  while (static_cast<int>(cache.size()) <= s)
    cache.push_back(frenet_derivative(cache.back()));
  return cache[s];
}

const DiffPoly& grad_norm_sq(int m) {
  static std::vector<DiffPoly> cache;
  while (static_cast<int>(cache.size()) <= m) {
    const int s = static_cast<int>(cache.size());
    const FrenetVector& v = frenet_normal_derivative(s);
    cache.push_back(v.tangential * v.tangential + v.normal * v.normal);
  }
  return cache[m];
}

double energy(const InducedMetric& metric, const CurvatureJet& jet, int m) {
  const DiffPoly& p = grad_norm_sq(m);
  if (jet.order < std::max(0, m - 1))
    throw std::invalid_argument("energy: insufficient jet order");
  const int n = metric.size();
  double acc = 0.0;
  std::vector<double> values(jet.order + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= jet.order; ++j) values[j] = jet.k(i, j);
    acc += metric.weights[i] * (1.0 + p.evaluate(values));
  }
  return acc;
}

double energy(const DiscreteCurve& curve, int m) {
  const InducedMetric metric = induced_metric(curve);
  const CurvatureJet jet = curvature_jet(curve, metric, std::max(0, m - 1));
  return energy(metric, jet, m);
}

double threshold(const SpaceForm& space, double b_squared) {
  if (!admissible_b_interval(space).contains(b_squared))
    throw std::invalid_argument("inadmissible b^2 for this space");
  const double R = space.injectivity_radius();
  const double babs = std::sqrt(std::abs(b_squared));
  if (b_squared > 0.0) {
    const double first = 1.0 / babs;
    const double second = std::isinf(R) ? kInf : babs * R / kPi;
    return std::min(first, second);
  }
  const double first = 1.0 / babs;
  const double second = std::isinf(R) ? kInf : R / 2.0;
  return std::min(first, second);
}

ThresholdReport threshold_sup(const SpaceForm& space) {
  ThresholdReport rep;
  switch (space.kind()) {
    case SpaceKind::Euclidean:
    case SpaceKind::Hyperbolic:
      // R = inf kills the second branch; 1/|b| -> inf as b -> 0.
      rep.value = kInf;
      rep.b_squared = 0.0;
      rep.imaginary = false;
      rep.attained = false;
      return rep;
    case SpaceKind::Sphere: {
      // min{1/b, b/sqrt(K)} over b in [sqrt(K), 1]; the crossing K^{1/4}
      // always lies inside, so sup = K^{-1/4}.
      const double K = space.curvature();
      const double b = std::pow(K, 0.25);
      rep.value = threshold(space, b * b);
      rep.b_squared = b * b;
      rep.imaginary = false;
      rep.attained = true;
      return rep;
    }
  }
  return rep;
}

InitialConditionReport check_initial_condition(const DiscreteCurve& curve, int m) {
  InitialConditionReport rep;
  rep.admissible_m = (m >= 1);
  rep.F_m = (m >= 0) ? energy(curve, std::max(m, 0)) : 0.0;
  rep.threshold_sup = threshold_sup(curve.space).value;
  rep.satisfied = rep.admissible_m && (rep.F_m <= rep.threshold_sup);
  return rep;
}

}  // namespace hof
