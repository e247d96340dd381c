#include "gingap/correlations.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gingap/constants.hpp"
#include "gingap/gap.hpp"
#include "gingap/skewlinalg.hpp"

namespace gingap::correlations {

using kernels::KernelParams;
using kernels::Process;

namespace detail {

double rho_n_unchecked(std::span<const double> points, const KernelParams& p) {
  const std::size_t n = points.size();
  skewlinalg::SkewMatrix m(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m.upper(2 * i, 2 * i + 1) = kernels::s_kernel(points[i], points[i], p);
    for (std::size_t j = i + 1; j < n; ++j) {
      const kernels::KernelBlock b = kernels::kernel_block(points[i], points[j], p);
      m.upper(2 * i, 2 * j) = -b.i_xy;
      m.upper(2 * i, 2 * j + 1) = b.s_xy;
      m.upper(2 * i + 1, 2 * j) = -b.s_yx;
      m.upper(2 * i + 1, 2 * j + 1) = b.d_xy;
    }
  }
  const double pf = skewlinalg::pfaffian(m);
  if (p.process() == Process::RealGinibreBulk) return pf;
  return std::ldexp(pf, static_cast<int>(n));  // 2^n prefactor
}

}  // namespace detail

double rho_n(std::span<const double> points, const KernelParams& p) {
  const std::size_t n = points.size();
  if (n == 0) throw std::invalid_argument("rho_n: need at least one point");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(points[i] - points[j]) < 1e-12)
        throw std::invalid_argument("rho_n: points coincide within 1e-12");
  return detail::rho_n_unchecked(points, p);
}

double rho_annihilation(std::span<const double> points, double rho) {
  const auto n = static_cast<int>(points.size());
  return std::ldexp(rho_n(points, KernelParams::coalescence(2.0 * rho)), -n);
}

double truncated_pair_correlation(double x, const KernelParams& p) {
  if (x == 0.0) throw std::invalid_argument("truncated_pair_correlation: x must be nonzero");
  const double pts[2] = {x, 0.0};
  const double one[1] = {x};
  const double zero[1] = {0.0};
  return rho_n(pts, p) - rho_n(one, p) * rho_n(zero, p);
}

double correlation_from_gap_derivative(std::span<const double> y, const KernelParams& p,
                                       double step) {
  const std::size_t n = y.size();
  if (n == 0 || n > 3)
    throw std::invalid_argument("correlation_from_gap_derivative: n must be in 1..3");
  if (!(step > 0.0)) throw std::invalid_argument("correlation_from_gap_derivative: step <= 0");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(y[i] < y[i + 1]))
      throw std::invalid_argument("correlation_from_gap_derivative: y must be strictly increasing");

  if (p.process() == Process::RealGinibreBulk) {
    if (n != 1)
      throw std::invalid_argument(
          "correlation_from_gap_derivative: RealGinibreBulk supports n = 1 only");
    // -d/ds E(0;(y,y+s)) at s=0, central difference on the small-s series
    const gap::PowerSeries& e = gap::rg_gap_series();
    return -(e.eval_unchecked(step / 2.0) - e.eval_unchecked(-step / 2.0)) / step;
  }
  if (p.process() != Process::Coalescence)
    throw std::invalid_argument(
        "correlation_from_gap_derivative: no multi-interval gap formula for this process");

  // (-1)^n d^n/dx_2 dx_4 ... of Pf[erfc] at collapsed intervals; the Pfaffian
  // formula is entire in the endpoints, so central stencils may cross them.
  const double rho = p.rho();
  std::vector<double> endpoints(2 * n);
  double acc = 0.0;
  const std::size_t combos = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < combos; ++mask) {
    int sgn = 1;
    for (std::size_t i = 0; i < n; ++i) {
      endpoints[2 * i] = y[i];
      if (mask & (std::size_t{1} << i)) {
        endpoints[2 * i + 1] = y[i] + step / 2.0;
      } else {
        endpoints[2 * i + 1] = y[i] - step / 2.0;
        sgn = -sgn;
      }
    }
    acc += sgn * gap::detail::gap_coalescence_unchecked(endpoints, rho);
  }
  const double deriv = acc / std::pow(step, static_cast<double>(n));
  return (n % 2 == 0) ? deriv : -deriv;
}

}  // namespace gingap::correlations
