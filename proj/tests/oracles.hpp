// Test-only oracles, independent of the library's evaluation paths.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace oracles {

/// erf by its Taylor series at the origin, summed to machine precision.
/// Converges fast for |x| <= 2; independent of libm's erf.
inline double taylor_erf(double x) {
  const double two_over_sqrt_pi = 1.1283791670955125739;
  double term = x;
  double sum = x;
  const double x2 = x * x;
  for (int n = 1; n < 200; ++n) {
    term *= -x2 / n;
    const double add = term / (2 * n + 1);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return two_over_sqrt_pi * sum;
}

/// P(a,x) for half-integer a built from erf by the upward recurrence
/// P(a+1,x) = P(a,x) - x^a e^{-x} / Gamma(a+1), starting at P(1/2,x) = erf(sqrt x).
inline double half_integer_gamma_p(double a, double x) {
  const double sqrtpi = 1.7724538509055160273;
  double aa = 0.5;
  double p = taylor_erf(std::sqrt(x));
  double log_gamma_ap1 = std::log(sqrtpi) + std::log(0.5);  // ln Gamma(3/2)
  while (aa + 0.5 <= a + 1e-9) {
    p -= std::exp(aa * std::log(x) - x - log_gamma_ap1);
    aa += 1.0;
    log_gamma_ap1 += std::log(aa);  // Gamma(aa+1) = aa * Gamma(aa)
  }
  return p;
}

/// 4x4 Pfaffian from the explicit expansion a12 a34 - a13 a24 + a14 a23.
inline double pfaffian4(double a12, double a13, double a14, double a23, double a24, double a34) {
  return a12 * a34 - a13 * a24 + a14 * a23;
}

/// Determinant by Laplace cofactor expansion (exponential cost; dims <= 12).
inline double laplace_det(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  double det = 0.0;
  double sign = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<double>> minor(n - 1, std::vector<double>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    det += sign * m[0][j] * laplace_det(minor);
    sign = -sign;
  }
  return det;
}

/// Adaptive Simpson, independent of the library quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b, double tol,
                      int depth = 40) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  std::function<double(double, double, double, double, double, double, int)> rec =
      [&](double x0, double x2, double f0, double f1, double f2, double eps, int d) -> double {
    const double x1l = 0.5 * (x0 + 0.5 * (x0 + x2));
    const double xm = 0.5 * (x0 + x2);
    const double x1r = 0.5 * (xm + x2);
    const double fl = f(x1l), fr = f(x1r);
    const double s = (x2 - x0) / 6.0 * (f0 + 4.0 * f1 + f2);
    const double sl = (xm - x0) / 6.0 * (f0 + 4.0 * fl + f1);
    const double sr = (x2 - xm) / 6.0 * (f1 + 4.0 * fr + f2);
    if (d <= 0 || std::abs(sl + sr - s) < 15.0 * eps) return sl + sr + (sl + sr - s) / 15.0;
    return rec(x0, xm, f0, fl, f1, eps * 0.5, d - 1) + rec(xm, x2, f1, fr, f2, eps * 0.5, d - 1);
  };
  return rec(a, b, fa, fm, fb, tol, depth);
}

/// Small deterministic generator for test inputs.
struct TestRng {
  std::uint64_t state;
  explicit TestRng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace oracles
