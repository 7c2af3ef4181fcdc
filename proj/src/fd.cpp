#include "hof/fd.hpp"

#include <stdexcept>

namespace hof::fd {

// B. Fornberg, "Generation of finite difference formulas on arbitrarily
// spaced grids", Math. Comp. 51 (1988).
Eigen::MatrixXd fornberg_weights(const Eigen::VectorXd& xs, double z, int max_order) {
  const int p = static_cast<int>(xs.size());
  if (p < max_order + 1) throw std::invalid_argument("fornberg_weights: stencil too small");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(p, max_order + 1);
  double c1 = 1.0;
  double c4 = xs[0] - z;
  w(0, 0) = 1.0;
  for (int i = 1; i < p; ++i) {
    const int mn = std::min(i, max_order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = xs[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = xs[i] - xs[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          w(i, k) = c1 * (k * w(i - 1, k - 1) - c5 * w(i - 1, k)) / c2;
        w(i, 0) = -c1 * c5 * w(i - 1, 0) / c2;
      }
      for (int k = mn; k >= 1; --k)
        w(j, k) = (c4 * w(j, k) - k * w(j, k - 1)) / c3;
      w(j, 0) = c4 * w(j, 0) / c3;
    }
    c1 = c2;
  }
  return w;
}

namespace {

// Gathers the stencil abscissae around node i, unwrapping the period so the
// coordinates are monotone across the seam.
void gather_stencil(const Eigen::ArrayXd& s, double period, int i, int radius,
                    Eigen::VectorXd& xs, Eigen::VectorXi& idx) {
  const int n = static_cast<int>(s.size());
  const int p = 2 * radius + 1;
  xs.resize(p);
  idx.resize(p);
  for (int k = -radius; k <= radius; ++k) {
    int j = i + k;
    double shift = 0.0;
    while (j < 0) { j += n; shift -= period; }
    while (j >= n) { j -= n; shift += period; }
    xs[k + radius] = s[j] + shift;
    idx[k + radius] = j;
  }
}

}  // namespace

Eigen::ArrayXXd periodic_jet(const Eigen::ArrayXd& y, const Eigen::ArrayXd& s,
                             double period, int max_order, int radius) {
  const int n = static_cast<int>(y.size());
  if (s.size() != n) throw std::invalid_argument("periodic_jet: size mismatch");
  if (2 * radius + 1 > n) throw std::invalid_argument("periodic_jet: stencil wider than ring");
  Eigen::ArrayXXd out(n, max_order + 1);
  Eigen::VectorXd xs;
  Eigen::VectorXi idx;
  for (int i = 0; i < n; ++i) {
    gather_stencil(s, period, i, radius, xs, idx);
    const Eigen::MatrixXd w = fornberg_weights(xs, s[i], max_order);
    for (int d = 0; d <= max_order; ++d) {
      double acc = 0.0;
      for (int k = 0; k < xs.size(); ++k) acc += w(k, d) * y[idx[k]];
      out(i, d) = acc;
    }
  }
  return out;
}

Eigen::ArrayXd periodic_derivative(const Eigen::ArrayXd& y, const Eigen::ArrayXd& s,
                                   double period, int order, int radius) {
  return periodic_jet(y, s, period, order, radius).col(order);
}

}  // namespace hof::fd
