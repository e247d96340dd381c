#pragma once

namespace gingap::specialfun {

/// erf(x) = (2/sqrt(pi)) * integral_0^x exp(-t^2) dt.
double erf(double x);

/// erfc(x) = 1 - erf(x), accurate in the tail.
double erfc(double x);

/// Regularized lower incomplete gamma P(a,x) = gamma(a;x)/Gamma(a), in [0,1].
/// Power series for x < a+1, continued fraction otherwise.
/// Throws std::domain_error for a <= 0 or x < 0.
double lower_incomplete_gamma_regularized(double a, double x);

/// ln Gamma(a) for a > 0. Throws std::domain_error for a <= 0.
double log_gamma(double a);

/// zeta(3/2), computed once by direct summation with an Euler-Maclaurin tail.
double zeta_three_halves();

}  // namespace gingap::specialfun
