#pragma once

#include <functional>
#include <span>
#include <vector>

namespace gingap::quadrature {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on (-1, 1), ascending
  std::vector<double> weights;
};

/// Gauss-Legendre rule of the given order (Newton iteration on P_n).
/// Cached per order; thread-safe.
const GaussLegendreRule& gauss_legendre(int order);

struct QuadResult {
  double value;
  double error_estimate;
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a,b].
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol = 1e-12, double rel_tol = 1e-12,
                              int max_depth = 48);

}  // namespace gingap::quadrature
