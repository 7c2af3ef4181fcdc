#include "hof/curve.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hof/fd.hpp"

namespace hof {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void validate_curve(const DiscreteCurve& curve, double max_edge_ratio) {
  const int n = curve.size();
  if (n < 16) throw std::invalid_argument("curve needs at least 16 vertices");
  for (int i = 0; i < n; ++i) {
    if (!curve.space.inside_chart(curve.vertex(i)))
      throw std::domain_error("curve leaves chart");
  }
  const InducedMetric m = induced_metric(curve);
  const double lmin = m.edge_lengths.minCoeff();
  const double lmax = m.edge_lengths.maxCoeff();
  if (!(lmin > 0.0)) throw std::domain_error("immersion failure: degenerate edge");
  if (lmax / lmin > max_edge_ratio)
    throw std::domain_error("immersion failure: edge-length ratio exceeds bound");
}

InducedMetric induced_metric(const DiscreteCurve& curve) {
  const int n = curve.size();
  InducedMetric m;
  m.edge_lengths.resize(n);
  m.weights.resize(n);
  m.arclength.resize(n);
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2d a = curve.vertex(i);
    const Eigen::Vector2d b = curve.vertex((i + 1) % n);
    const double lam = curve.space.conformal_factor(0.5 * (a + b));
    m.edge_lengths[i] = lam * (b - a).norm();
  }
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    m.arclength[i] = acc;
    acc += m.edge_lengths[i];
  }
  m.total_length = acc;
  if (!(m.total_length > 1e-6)) throw std::domain_error("degenerate curve: length below 1e-6");
  for (int i = 0; i < n; ++i)
    m.weights[i] = 0.5 * (m.edge_lengths[(i + n - 1) % n] + m.edge_lengths[i]);
  return m;
}

CurveFrames curve_frames(const DiscreteCurve& curve, const InducedMetric& metric) {
  const int n = curve.size();
  const Eigen::ArrayXd xs = curve.vertices.col(0);
  const Eigen::ArrayXd ys = curve.vertices.col(1);
  const int radius = fd::stencil_radius_for(1);
  const Eigen::ArrayXd dx =
      fd::periodic_derivative(xs, metric.arclength, metric.total_length, 1, radius);
  const Eigen::ArrayXd dy =
      fd::periodic_derivative(ys, metric.arclength, metric.total_length, 1, radius);
  CurveFrames f;
  f.tangent.resize(n, 2);
  f.normal.resize(n, 2);
  f.lambda.resize(n);
  for (int i = 0; i < n; ++i) {
    const double norm = std::hypot(dx[i], dy[i]);
    const double tx = dx[i] / norm, ty = dy[i] / norm;
    f.tangent(i, 0) = tx;
    f.tangent(i, 1) = ty;
    f.normal(i, 0) = ty;
    f.normal(i, 1) = -tx;
    f.lambda[i] = curve.space.conformal_factor(curve.vertex(i));
  }
  return f;
}

CurvatureJet curvature_jet(const DiscreteCurve& curve, int order) {
  return curvature_jet(curve, induced_metric(curve), order);
}

CurvatureJet curvature_jet(const DiscreteCurve& curve, const InducedMetric& metric,
                           int order) {
  const int n = curve.size();
  if (order > n / 4) throw std::invalid_argument("insufficient resolution for jet order");
  const Eigen::ArrayXd xs = curve.vertices.col(0);
  const Eigen::ArrayXd ys = curve.vertices.col(1);
  const double L = metric.total_length;
  const int radius = fd::stencil_radius_for(2);
  const Eigen::ArrayXXd jx = fd::periodic_jet(xs, metric.arclength, L, 2, radius);
  const Eigen::ArrayXXd jy = fd::periodic_jet(ys, metric.arclength, L, 2, radius);

  Eigen::ArrayXd kappa(n);
  for (int i = 0; i < n; ++i) {
    const double x1 = jx(i, 1), y1 = jy(i, 1);
    const double x2 = jx(i, 2), y2 = jy(i, 2);
    const double speed = std::hypot(x1, y1);
    const double cross = x1 * y2 - y1 * x2;
    const double kappa_euclid = cross / (speed * speed * speed);
    const Eigen::Vector2d normal(y1 / speed, -x1 / speed);
    const ChartCorrection c =
        geodesic_curvature_correction(curve.space, curve.vertex(i), normal);
    kappa[i] = (kappa_euclid + c.dlog_lambda_dn) / c.lambda;
  }

  CurvatureJet jet;
  jet.order = order;
  if (order == 0) {
    jet.k = kappa;
  } else {
    jet.k = fd::periodic_jet(kappa, metric.arclength, L, order,
                             fd::stencil_radius_for(order));
    jet.k.col(0) = kappa;
  }
  return jet;
}

namespace {

// Cyclic tridiagonal solve (Thomas + Sherman-Morrison); a = sub, b = diag,
// c = super, with wrap-around entries a[0] (row 0, col n-1) and c[n-1]
// (row n-1, col 0).
Eigen::VectorXd solve_cyclic_tridiagonal(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                                         const Eigen::VectorXd& c, const Eigen::VectorXd& rhs) {
  const int n = static_cast<int>(b.size());
  auto thomas = [&](const Eigen::VectorXd& diag, const Eigen::VectorXd& r) {
    Eigen::VectorXd cp(n), dp(n);
    cp[0] = c[0] / diag[0];
    dp[0] = r[0] / diag[0];
    for (int i = 1; i < n; ++i) {
      const double m = diag[i] - a[i] * cp[i - 1];
      cp[i] = c[i] / m;
      dp[i] = (r[i] - a[i] * dp[i - 1]) / m;
    }
    Eigen::VectorXd x(n);
    x[n - 1] = dp[n - 1];
    for (int i = n - 2; i >= 0; --i) x[i] = dp[i] - cp[i] * x[i + 1];
    return x;
  };
  const double alpha = a[0], beta = c[n - 1];
  const double gamma = -b[0];
  Eigen::VectorXd bmod = b;
  bmod[0] -= gamma;
  bmod[n - 1] -= alpha * beta / gamma;
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  u[0] = gamma;
  u[n - 1] = beta;
  const Eigen::VectorXd y = thomas(bmod, rhs);
  const Eigen::VectorXd z = thomas(bmod, u);
  const double vy = y[0] + alpha / gamma * y[n - 1];
  const double vz = 1.0 + z[0] + alpha / gamma * z[n - 1];
  return y - (vy / vz) * z;
}

// Periodic cubic spline through (s_i, y_i) with period L; returns the knot
// second derivatives (moments).
Eigen::VectorXd periodic_spline_moments(const Eigen::ArrayXd& s, double L,
                                        const Eigen::ArrayXd& y) {
  const int n = static_cast<int>(s.size());
  Eigen::VectorXd h(n);
  for (int i = 0; i < n; ++i) {
    const double next = (i + 1 < n) ? s[i + 1] : s[0] + L;
    h[i] = next - s[i];
  }
  Eigen::VectorXd sub(n), diag(n), sup(n), rhs(n);
  for (int i = 0; i < n; ++i) {
    const int prev = (i + n - 1) % n;
    sub[i] = h[prev] / 6.0;
    diag[i] = (h[prev] + h[i]) / 3.0;
    sup[i] = h[i] / 6.0;
    const double dnext = (y[(i + 1) % n] - y[i]) / h[i];
    const double dprev = (y[i] - y[prev]) / h[prev];
    rhs[i] = dnext - dprev;
  }
  return solve_cyclic_tridiagonal(sub, diag, sup, rhs);
}

double spline_eval(const Eigen::ArrayXd& s, double L, const Eigen::ArrayXd& y,
                   const Eigen::VectorXd& moments, int seg, double t) {
  const int n = static_cast<int>(s.size());
  const double s0 = s[seg];
  const double s1 = (seg + 1 < n) ? s[seg + 1] : s[0] + L;
  const double h = s1 - s0;
  const double y0 = y[seg], y1 = y[(seg + 1) % n];
  const double m0 = moments[seg], m1 = moments[(seg + 1) % n];
  const double u = s1 - t, v = t - s0;
  return (m0 * u * u * u + m1 * v * v * v) / (6.0 * h) +
         (y0 - m0 * h * h / 6.0) * u / h + (y1 - m1 * h * h / 6.0) * v / h;
}

}  // namespace

DiscreteCurve reparametrize(const DiscreteCurve& curve) {
  const int n = curve.size();
  DiscreteCurve out = curve;
  for (int pass = 0; pass < 3; ++pass) {
    const InducedMetric m = induced_metric(out);
    const double ratio = m.edge_lengths.maxCoeff() / m.edge_lengths.minCoeff();
    if (pass > 0 && ratio <= 1.0 + 2e-4) break;
    const Eigen::ArrayXd xs = out.vertices.col(0);
    const Eigen::ArrayXd ys = out.vertices.col(1);
    const Eigen::VectorXd mx = periodic_spline_moments(m.arclength, m.total_length, xs);
    const Eigen::VectorXd my = periodic_spline_moments(m.arclength, m.total_length, ys);
    Eigen::ArrayX2d fresh(n, 2);
    int seg = 0;
    for (int j = 0; j < n; ++j) {
      const double target = j * m.total_length / n;
      while (seg + 1 < n && m.arclength[seg + 1] <= target) ++seg;
      fresh(j, 0) = spline_eval(m.arclength, m.total_length, xs, mx, seg, target);
      fresh(j, 1) = spline_eval(m.arclength, m.total_length, ys, my, seg, target);
    }
    out.vertices = fresh;
  }
  return out;
}

DiscreteCurve make_circle(const SpaceForm& space, double intrinsic_radius, int n) {
  const double r = space.chart_radius_of_intrinsic(intrinsic_radius);
  DiscreteCurve c;
  c.space = space;
  c.vertices.resize(n, 2);
  for (int i = 0; i < n; ++i) {
    const double th = 2.0 * kPi * i / n;
    c.vertices(i, 0) = r * std::cos(th);
    c.vertices(i, 1) = r * std::sin(th);
  }
  return c;
}

DiscreteCurve make_ellipse(const SpaceForm& space, double a, double b, int n) {
  // Sample at (approximately) uniform metric arclength via a dense table.
  const int dense = 64 * n;
  Eigen::ArrayXd theta(dense + 1), s(dense + 1);
  auto point = [&](double th) {
    return Eigen::Vector2d(a * std::cos(th), b * std::sin(th));
  };
  s[0] = 0.0;
  theta[0] = 0.0;
  for (int i = 1; i <= dense; ++i) {
    theta[i] = 2.0 * kPi * i / dense;
    const Eigen::Vector2d p = point(theta[i - 1]), q = point(theta[i]);
    s[i] = s[i - 1] + space.conformal_factor(0.5 * (p + q)) * (q - p).norm();
  }
  DiscreteCurve c;
  c.space = space;
  c.vertices.resize(n, 2);
  int seg = 0;
  for (int j = 0; j < n; ++j) {
    const double target = j * s[dense] / n;
    while (seg + 1 <= dense && s[seg + 1] < target) ++seg;
    const double frac = (target - s[seg]) / (s[seg + 1] - s[seg]);
    const double th = theta[seg] + frac * (theta[seg + 1] - theta[seg]);
    c.vertices.row(j) = point(th).transpose();
  }
  return c;
}

DiscreteCurve make_perturbed_circle(const SpaceForm& space, double intrinsic_radius,
                                    double amplitude, int max_mode, std::uint64_t seed,
                                    int n) {
  const double r0 = space.chart_radius_of_intrinsic(intrinsic_radius);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> ac(max_mode + 1, 0.0), bc(max_mode + 1, 0.0);
  for (int k = 1; k <= max_mode; ++k) {
    ac[k] = unif(rng);
    bc[k] = unif(rng);
  }
  auto delta = [&](double th) {
    double d = 0.0;
    for (int k = 1; k <= max_mode; ++k)
      d += ac[k] * std::cos(k * th) + bc[k] * std::sin(k * th);
    return d;
  };
  double dmax = 0.0;
  for (int i = 0; i < 4096; ++i)
    dmax = std::max(dmax, std::abs(delta(2.0 * kPi * i / 4096)));
  const double scale = (dmax > 0.0) ? amplitude / dmax : 0.0;

  DiscreteCurve c;
  c.space = space;
  c.vertices.resize(n, 2);
  for (int i = 0; i < n; ++i) {
    const double th = 2.0 * kPi * i / n;
    const double r = r0 * (1.0 + scale * delta(th));
    c.vertices(i, 0) = r * std::cos(th);
    c.vertices(i, 1) = r * std::sin(th);
  }
  return c;
}

CircleFit fit_chart_circle(const DiscreteCurve& curve) {
  // Kasa algebraic fit: minimize |x|^2 + D x + E y + F over (D, E, F).
  const int n = curve.size();
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    A(i, 0) = curve.vertices(i, 0);
    A(i, 1) = curve.vertices(i, 1);
    A(i, 2) = 1.0;
    rhs[i] = -(curve.vertices(i, 0) * curve.vertices(i, 0) +
               curve.vertices(i, 1) * curve.vertices(i, 1));
  }
  const Eigen::Vector3d sol = (A.transpose() * A).ldlt().solve(A.transpose() * rhs);
  CircleFit fit;
  fit.center = Eigen::Vector2d(-sol[0] / 2.0, -sol[1] / 2.0);
  fit.radius = std::sqrt(std::max(0.0, fit.center.squaredNorm() - sol[2]));
  double dev = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2d v = curve.vertex(i);
    const double lam = curve.space.conformal_factor(v);
    dev = std::max(dev, lam * std::abs((v - fit.center).norm() - fit.radius));
  }
  fit.max_metric_deviation = dev;
  return fit;
}

}  // namespace hof
