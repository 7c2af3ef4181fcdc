#pragma once

#include <Eigen/Dense>

namespace hof::fd {

// Fornberg weights: for stencil nodes xs[0..p-1] and evaluation point z,
// returns W (p x (max_order+1)) with W(i, d) the weight of node i in the
// d-th derivative approximation.  Exact for polynomials of degree < p.
Eigen::MatrixXd fornberg_weights(const Eigen::VectorXd& xs, double z, int max_order);

// Periodic derivative of samples y living on a closed loop with node
// coordinates s (strictly increasing, period L).  Returns the d-th
// derivative at every node using symmetric (2*radius+1)-point stencils
// with Fornberg weights, so non-uniform node spacing is handled exactly.
Eigen::ArrayXd periodic_derivative(const Eigen::ArrayXd& y, const Eigen::ArrayXd& s,
                                   double period, int order, int radius);

// All derivatives 0..max_order in one pass (column j = order j).
Eigen::ArrayXXd periodic_jet(const Eigen::ArrayXd& y, const Eigen::ArrayXd& s,
                             double period, int max_order, int radius);

inline int stencil_radius_for(int order) { return (order + 5) / 2; }

}  // namespace hof::fd
