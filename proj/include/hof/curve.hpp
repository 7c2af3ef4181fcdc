#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "hof/space_form.hpp"

namespace hof {

// Closed immersed polygon in a conformal chart.  Vertices are chart
// coordinates with ring indexing (vertex N == vertex 0).
struct DiscreteCurve {
  SpaceForm space = SpaceForm::euclidean();
  Eigen::ArrayX2d vertices;

  int size() const { return static_cast<int>(vertices.rows()); }
  Eigen::Vector2d vertex(int i) const { return vertices.row(i).transpose(); }
};

// Throws std::invalid_argument / std::domain_error on violation:
// N >= 16, positive metric edge lengths, edge-ratio bound, chart bounds.
void validate_curve(const DiscreteCurve& curve, double max_edge_ratio = 10.0);

struct InducedMetric {
  Eigen::ArrayXd edge_lengths;  // l_i between vertices i and i+1 (midpoint rule)
  Eigen::ArrayXd weights;       // w_i = (l_{i-1} + l_i)/2
  Eigen::ArrayXd arclength;     // cumulative, arclength[0] = 0
  double total_length = 0.0;

  int size() const { return static_cast<int>(edge_lengths.size()); }
};

InducedMetric induced_metric(const DiscreteCurve& curve);

// Euclidean unit tangent/normal in the chart; the metric unit normal is
// normal/lambda.  normal = tangent rotated by -90 degrees, so it points
// outward on a counterclockwise curve.
struct CurveFrames {
  Eigen::ArrayX2d tangent;
  Eigen::ArrayX2d normal;
  Eigen::ArrayXd lambda;  // conformal factor at the vertices
};

CurveFrames curve_frames(const DiscreteCurve& curve, const InducedMetric& metric);

// Geodesic curvature and its covariant arclength derivatives.
// k(i, j) = j-th derivative of kappa at vertex i; units 1/length^{j+1}.
struct CurvatureJet {
  Eigen::ArrayXXd k;
  int order = 0;

  double value(int i, int j) const { return k(i, j); }
};

CurvatureJet curvature_jet(const DiscreteCurve& curve, int order);
CurvatureJet curvature_jet(const DiscreteCurve& curve, const InducedMetric& metric, int order);

// Resamples the curve at uniform metric arclength through a periodic cubic
// spline.  The geometric image is preserved to interpolation error; N is
// unchanged.
DiscreteCurve reparametrize(const DiscreteCurve& curve);

// Initial-curve factories.  Radii are intrinsic (geodesic) radii; circles
// are centered at the chart origin where geodesic circles are chart circles.
DiscreteCurve make_circle(const SpaceForm& space, double intrinsic_radius, int n);
DiscreteCurve make_ellipse(const SpaceForm& space, double a, double b, int n);

// Band-limited radial perturbation r(theta) = r0 (1 + d(theta)) with
// max|d| = amplitude and Fourier modes 1..max_mode drawn from the seed.
DiscreteCurve make_perturbed_circle(const SpaceForm& space, double intrinsic_radius,
                                    double amplitude, int max_mode, std::uint64_t seed,
                                    int n);

// Least-squares chart circle through the vertices (geodesic circles are
// chart circles in all three models).  Returns center, radius and the
// maximal metric deviation of the vertices from the fitted circle.
struct CircleFit {
  Eigen::Vector2d center;
  double radius = 0.0;
  double max_metric_deviation = 0.0;
};

CircleFit fit_chart_circle(const DiscreteCurve& curve);

}  // namespace hof
