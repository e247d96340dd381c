#pragma once

#include <span>

#include "gingap/kernels.hpp"

namespace gingap::correlations {

/// n-point correlation function as the Pfaffian of the 2n x 2n antisymmetric
/// block matrix built from the process kernels, with prefactor 1 for the
/// real-Ginibre bulk and 2^n for the two diffusion limits (whose kernels
/// carry the per-point normalization).
///
/// Points must be pairwise distinct; two points closer than 1e-12 raise
/// std::invalid_argument (coincident configurations are a tested limit, not
/// a generic input).
double rho_n(std::span<const double> points, const kernels::KernelParams& p);

/// Annihilation correlations at annihilation density rho, computed through
/// the coalescence route: 2^{-n} * rho_n(points, coalescence at 2*rho).
/// At rho = 1/sqrt(2*pi) this equals rho_n(points, real_ginibre_bulk()).
double rho_annihilation(std::span<const double> points, double rho);

/// Truncated pair correlation rho_2^T(x,0) = rho_2(x,0) - rho_1(x) rho_1(0).
/// Requires x != 0.
double truncated_pair_correlation(double x, const kernels::KernelParams& p);

/// Cross-validation oracle, not a production path: recovers rho_n by
/// numerically differentiating the multi-interval gap probability at
/// collapsed intervals (central differences, default step 1e-3).
/// Supported: Coalescence with n <= 3, RealGinibreBulk with n = 1 (through
/// the small-s gap series). y must be sorted strictly increasing.
double correlation_from_gap_derivative(std::span<const double> y,
                                       const kernels::KernelParams& p,
                                       double step = 1e-3);

namespace detail {
/// rho_n without the coincidence guard, for quadrature consumers whose node
/// sets are distinct by construction.
double rho_n_unchecked(std::span<const double> points, const kernels::KernelParams& p);
}  // namespace detail

}  // namespace gingap::correlations
