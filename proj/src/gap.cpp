#include "gingap/gap.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gingap/constants.hpp"
#include "gingap/correlations.hpp"
#include "gingap/kernels.hpp"
#include "gingap/quadrature.hpp"
#include "gingap/skewlinalg.hpp"
#include "gingap/specialfun.hpp"

namespace gingap::gap {

namespace sf = gingap::specialfun;

IntervalUnion IntervalUnion::from_endpoints(std::vector<double> endpoints) {
  if (endpoints.empty() || endpoints.size() % 2 != 0)
    throw std::invalid_argument("IntervalUnion: need a positive even number of endpoints");
  for (std::size_t i = 0; i + 1 < endpoints.size(); ++i) {
    const bool closing = (i % 2 == 0);  // x_{2k-1} <= x_{2k}, strict between intervals
    if (closing ? !(endpoints[i] <= endpoints[i + 1]) : !(endpoints[i] < endpoints[i + 1]))
      throw std::invalid_argument("IntervalUnion: endpoints must be ordered");
  }
  return IntervalUnion(std::move(endpoints));
}

IntervalUnion IntervalUnion::single(double a, double b) {
  return from_endpoints({a, b});
}

namespace detail {

double gap_coalescence_unchecked(std::span<const double> endpoints, double rho) {
  const std::size_t m = endpoints.size();
  skewlinalg::SkewMatrix a(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      a.upper(i, j) = sf::erfc(0.5 * kSqrtPi * rho * (endpoints[j] - endpoints[i]));
  return skewlinalg::pfaffian(a);
}

}  // namespace detail

double gap_finite_n(double half_width, int n_matrix) {
  if (n_matrix < 2 || n_matrix > 512 || n_matrix % 2 != 0)
    throw std::domain_error("gap_finite_n: n_matrix must be even, in [2, 512]");
  if (!(half_width >= 0.0)) throw std::domain_error("gap_finite_n: half_width must be >= 0");
  const int m = n_matrix / 2;
  const double x = half_width * half_width;
  std::vector<double> half_lg(m + 1);  // (1/2) lgamma(2j-1), j = 1..m
  for (int j = 1; j <= m; ++j) half_lg[j] = 0.5 * sf::log_gamma(2.0 * j - 1.0);
  skewlinalg::DenseMatrix a(m, m);
  for (int j = 1; j <= m; ++j) {
    for (int l = 1; l <= m; ++l) {
      const double ag = l + j - 1.5;
      const double coef = std::exp(sf::log_gamma(ag) - half_lg[j] - half_lg[l]) / kSqrt2Pi;
      a(j - 1, l - 1) = (j == l ? 1.0 : 0.0) -
                        sf::lower_incomplete_gamma_regularized(ag, x) * coef;
    }
  }
  return skewlinalg::determinant(std::move(a));
}

double gap_coalescence(const IntervalUnion& j, double rho) {
  if (!(rho > 0.0)) throw std::domain_error("gap_coalescence: rho must be positive");
  return detail::gap_coalescence_unchecked(j.endpoints(), rho);
}

double gap_rg_xi2(const IntervalUnion& j) { return gap_coalescence(j, kSqrt2OverPi); }

double even_count_gap(const IntervalUnion& j) {
  return 0.5 + 0.5 * gap_coalescence(j, kSqrt2OverPi);
}

namespace {

// sum a buffer by pairwise reduction: summation order is fixed by the buffer
// layout, so the result does not depend on how the entries were produced
double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t h = v.size() / 2;
  return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

constexpr int kGfQuadOrder = 24;

// integral of rho_n over the ordered simplex 0 < x_1 < ... < x_n < s,
// mapped to the unit cube by x_k = s * t_k * t_{k+1} * ... * t_n with
// jacobian s^n * prod_k t_k^{k-1}; nodes evaluated in parallel, combined
// by a fixed pairwise reduction
double simplex_integral(double s, int n, const kernels::KernelParams& p) {
  const auto& rule = quadrature::gauss_legendre(kGfQuadOrder);
  std::vector<double> node(kGfQuadOrder), weight(kGfQuadOrder);
  for (int i = 0; i < kGfQuadOrder; ++i) {
    node[i] = 0.5 * (rule.nodes[i] + 1.0);  // map to (0,1)
    weight[i] = 0.5 * rule.weights[i];
  }
  std::int64_t total = 1;
  for (int k = 0; k < n; ++k) total *= kGfQuadOrder;
  std::vector<double> vals(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (std::int64_t flat = 0; flat < total; ++flat) {
    std::int64_t rem = flat;
    double w = 1.0;
    double xs[8];
    double prod = 1.0;  // t_k * ... * t_n running from the top axis down
    for (int k = n - 1; k >= 0; --k) {
      const int idx = static_cast<int>(rem % kGfQuadOrder);
      rem /= kGfQuadOrder;
      const double t = node[idx];
      w *= weight[idx] * std::pow(t, k);  // jacobian factor t_k^{k-1}, k 1-based
      prod *= t;
      xs[k] = s * prod;
    }
    vals[static_cast<std::size_t>(flat)] =
        w * correlations::detail::rho_n_unchecked(std::span<const double>(xs, n), p);
  }
  const double unit = pairwise_sum(vals);
  return unit * std::pow(s, n);
}

}  // namespace

double gap_truncated_gf(double s, double xi, int max_order) {
  if (!(s >= 0.0 && s <= 3.0)) throw std::domain_error("gap_truncated_gf: s outside [0, 3]");
  if (!(xi >= 0.0 && xi <= 2.0)) throw std::domain_error("gap_truncated_gf: xi outside [0, 2]");
  if (max_order < 1 || max_order > 4)
    throw std::domain_error("gap_truncated_gf: max_order must be in 1..4");
  if (s == 0.0) return 1.0;
  const auto p = kernels::KernelParams::real_ginibre_bulk();
  double result = 1.0;
  double xin = 1.0;
  for (int n = 1; n <= max_order; ++n) {
    xin *= -xi;
    // ((-xi)^n / n!) * n! * simplex integral
    result += xin * simplex_integral(s, n, p);
  }
  return result;
}

namespace {

const PowerSeries& build_rg_series() {
  static const PowerSeries series = [] {
    PowerSeries ps;
    ps.order = 15;
    ps.coefficients.assign(16, 0.0);
    auto& c = ps.coefficients;
    c[0] = 1.0;
    c[1] = -1.0 / kSqrt2Pi;
    c[3] = 1.0 / (12.0 * kSqrt2Pi);
    c[5] = -1.0 / (80.0 * kSqrt2Pi);
    c[6] = 1.0 / (720.0 * kPi);
    c[7] = 1.0 / (672.0 * kSqrt2Pi);
    c[8] = -1.0 / (3360.0 * kPi);
    c[9] = -1.0 / (6912.0 * kSqrt2Pi);
    c[10] = 7.0 / (172800.0 * kPi);
    c[11] = 1.0 / (84480.0 * kSqrt2Pi);
    c[12] = -23.0 / (5322240.0 * kPi);
    c[13] = -1.0 / (1198080.0 * kSqrt2Pi);
    c[14] = 1523.0 / (3874590720.0 * kPi);
    c[15] = -(1.0 / (762048000.0 * kSqrt2 * kPi * kSqrtPi) + 1.0 / (19353600.0 * kSqrt2Pi));
    return ps;
  }();
  return series;
}

const PowerSeries& build_spacing_series() {
  static const PowerSeries series = [] {
    PowerSeries ps;
    ps.order = 13;
    ps.coefficients.assign(14, 0.0);
    auto& c = ps.coefficients;
    const double p2 = kPi * kPi, p3 = p2 * kPi, p4 = p3 * kPi, p5 = p4 * kPi, p6 = p5 * kPi;
    c[1] = kPi;
    c[3] = -p2;
    c[4] = p2 / 3.0;
    c[5] = p3 / 2.0;
    c[6] = -4.0 * p3 / 15.0;
    c[7] = -p4 / 6.0;
    c[8] = 7.0 * p4 / 60.0;
    c[9] = p5 / 24.0;
    c[10] = -23.0 * p5 / 630.0;
    c[11] = -p6 / 120.0;
    c[12] = 1523.0 * p6 / 166320.0;
    c[13] = p6 * (-64.0 + 2520.0 * kPi) / 1814400.0;
    return ps;
  }();
  return series;
}

}  // namespace

const PowerSeries& rg_gap_series() { return build_rg_series(); }

const PowerSeries& annihilation_spacing_series() { return build_spacing_series(); }

double series_small_s(double s) {
  if (!(s >= 0.0 && s <= 2.2))
    throw std::domain_error("series_small_s: s outside validated window [0, 2.2]");
  return build_rg_series().eval_unchecked(s);
}

double series_small_s_spacing_annihilation(double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw std::domain_error("series_small_s_spacing_annihilation: s outside window [0, 1]");
  return build_spacing_series().eval_unchecked(s);
}

double c2_series_term(int n) {
  if (n < 2) throw std::invalid_argument("c2_series_term: n must be >= 2");
  double inner = 0.0;
  // sum_{p=1}^{n-1} 1/sqrt(p(n-p)), folded around the midpoint
  for (int p = 1; 2 * p < n; ++p)
    inner += 2.0 / std::sqrt(static_cast<double>(p) * static_cast<double>(n - p));
  if (n % 2 == 0) inner += 2.0 / static_cast<double>(n);  // p = n/2 term: 1/sqrt((n/2)^2)
  return (inner - kPi) / n;
}

double c2_constant() {
  static const double value = [] {
    constexpr int kNMax = 20000;
    std::vector<double> terms(kNMax - 1);
#pragma omp parallel for schedule(dynamic, 64)
    for (int n = 2; n <= kNMax; ++n) terms[n - 2] = c2_series_term(n);
    double sum = 0.0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) sum += *it;
    // terms decay like -C n^{-3/2}; fit the last decade and integrate the tail
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (int n = kNMax / 10; n <= kNMax; ++n) {
      const double lx = std::log(static_cast<double>(n));
      const double ly = std::log(-terms[n - 2]);
      sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
      ++cnt;
    }
    const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / cnt;
    const double alpha = -slope;
    const double big_c = std::exp(intercept);
    const double tail = -big_c * std::pow(kNMax + 0.5, 1.0 - alpha) / (alpha - 1.0);
    return std::log(2.0) - 0.25 + (sum + tail) / (4.0 * kPi);
  }();
  return value;
}

double asymptote_large_s(double s) {
  if (!(s > 0.0)) throw std::domain_error("asymptote_large_s: s must be positive");
  const double c1_tilde = sf::zeta_three_halves() / (2.0 * kSqrt2Pi);
  return std::exp(-c1_tilde * s + c2_constant());
}

double decay_rate_fourier(double xi) {
  if (!(xi >= 0.0 && xi <= 2.0)) throw std::domain_error("decay_rate_fourier: xi outside [0, 2]");
  const double w = 2.0 * xi - xi * xi;
  constexpr double kCut = 12.0;  // exp(-72) below the quadrature floor
  double integral;  // int_0^kCut log(1 - w exp(-k^2/2)) dk
  if (w >= 1.0) {
    // xi = 1: split the integrable log singularity at k = 0 analytically:
    // log(1 - e^{-k^2/2}) = log(k^2/2) + log((1 - e^{-k^2/2})/(k^2/2))
    constexpr double a = 0.5;
    auto smooth = [](double k) {
      const double u = 0.5 * k * k;
      const double ratio = (u < 1e-8) ? 1.0 - u / 2.0 + u * u / 6.0 : -std::expm1(-u) / u;
      return std::log(ratio);
    };
    const double analytic = 2.0 * (a * std::log(a) - a) - a * std::log(2.0);
    const double r1 = quadrature::integrate_adaptive(smooth, 0.0, a, 1e-14, 1e-13).value;
    auto f = [w](double k) { return std::log1p(-w * std::exp(-0.5 * k * k)); };
    const double r2 = quadrature::integrate_adaptive(f, a, kCut, 1e-14, 1e-13).value;
    integral = analytic + r1 + r2;
  } else {
    auto f = [w](double k) { return std::log1p(-w * std::exp(-0.5 * k * k)); };
    integral = quadrature::integrate_adaptive(f, 0.0, kCut, 1e-14, 1e-13).value;
  }
  return -integral / (2.0 * kPi);  // -(1/(4 pi)) * full-line integral, integrand even
}

double spacing_density_finite_n(double s, int n_matrix, double step) {
  if (!(step > 0.0) || !(s > 2.0 * step))
    throw std::invalid_argument("spacing_density_finite_n: need s > 2*step > 0");
  const double em = gap_finite_n((s - step) / 2.0, n_matrix);
  const double e0 = gap_finite_n(s / 2.0, n_matrix);
  const double ep = gap_finite_n((s + step) / 2.0, n_matrix);
  return kSqrt2Pi * (ep - 2.0 * e0 + em) / (step * step);
}

double wigner_surmise(double s) {
  if (!(s >= 0.0)) throw std::domain_error("wigner_surmise: s must be >= 0");
  return 0.5 * kPi * s * std::exp(-0.25 * kPi * s * s);
}

}  // namespace gingap::gap
