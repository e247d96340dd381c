#include "gingap/specialfun.hpp"

#include <cmath>
#include <stdexcept>

namespace gingap::specialfun {

double erf(double x) { return std::erf(x); }

double erfc(double x) { return std::erfc(x); }

double log_gamma(double a) {
  if (!(a > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  return std::lgamma(a);
}

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-16;

// series for P(a,x), valid x < a+1
double gamma_p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < kMaxIter; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps)
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  throw std::runtime_error("gamma_p_series: no convergence");
}

// modified Lentz continued fraction for Q(a,x), valid x >= a+1
double gamma_q_cont_frac(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps)
      return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  throw std::runtime_error("gamma_q_cont_frac: no convergence");
}

}  // namespace

double lower_incomplete_gamma_regularized(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("lower_incomplete_gamma_regularized: a must be > 0");
  if (x < 0.0) throw std::domain_error("lower_incomplete_gamma_regularized: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cont_frac(a, x);
}

double zeta_three_halves() {
  static const double value = [] {
    // sum_{n<N} n^{-3/2} + integral tail + Euler-Maclaurin corrections at N
    constexpr int N = 10000;
    double sum = 0.0;
    for (int n = N - 1; n >= 1; --n) sum += 1.0 / (static_cast<double>(n) * std::sqrt(static_cast<double>(n)));
    const double dN = static_cast<double>(N);
    const double fN = 1.0 / (dN * std::sqrt(dN));
    sum += 2.0 / std::sqrt(dN);        // integral_N^inf x^{-3/2} dx
    sum += 0.5 * fN;                   // f(N)/2
    sum += (1.5 / 12.0) * fN / dN;     // -B2/2! * f'(N)
    return sum;
  }();
  return value;
}

}  // namespace gingap::specialfun
