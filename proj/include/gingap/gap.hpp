#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace gingap::gap {

/// Ordered union of disjoint intervals J = (x1,x2) u ... u (x_{2n-1},x_{2n}).
/// Endpoints must satisfy x_{2i-1} <= x_{2i} < x_{2i+1}; a degenerate
/// component x_{2i-1} = x_{2i} is an empty interval and is allowed.
class IntervalUnion {
 public:
  static IntervalUnion from_endpoints(std::vector<double> endpoints);
  static IntervalUnion single(double a, double b);

  std::span<const double> endpoints() const { return endpoints_; }
  std::size_t interval_count() const { return endpoints_.size() / 2; }

 private:
  explicit IntervalUnion(std::vector<double> e) : endpoints_(std::move(e)) {}
  std::vector<double> endpoints_;
};

/// Fixed-order polynomial in s; coefficients[k] multiplies s^k.
/// Evaluation is only meaningful for |s| below the caller's validity bound;
/// eval_unchecked performs no window check.
struct PowerSeries {
  std::vector<double> coefficients;
  int order;

  double eval_unchecked(double s) const {
    double acc = 0.0;
    for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * s + coefficients[k];
    return acc;
  }
};

enum class GapMethod { FiniteN, Series, Asymptotic, TruncatedGF, MonteCarlo };

/// A computed gap-probability curve plus the metadata needed to reproduce it.
struct GapCurve {
  std::vector<double> s_values;
  std::vector<double> e_values;
  std::vector<double> stderrs;  // empty for deterministic methods
  GapMethod method = GapMethod::FiniteN;
  std::map<std::string, std::string> params;
};

/// E^{rG,N}(0;(-s,s)) for even N: determinant of the N/2 x N/2 matrix
///   delta_{jl} - gamma(l+j-3/2; s^2) / (sqrt(2 pi) (Gamma(2j-1) Gamma(2l-1))^{1/2}),
/// with every Gamma ratio formed in log space. `half_width` is s.
double gap_finite_n(double half_width, int n_matrix);

/// Coalescence gap probability E^c(0;J) = Pf[erfc(sqrt(pi) rho (x_j - x_i)/2)].
double gap_coalescence(const IntervalUnion& j, double rho);

/// E^{rG}(J;2) = gap_coalescence(j, sqrt(2/pi)); the Pfaffian itself, whose
/// square equals the determinant of the full sgn*erfc matrix.
double gap_rg_xi2(const IntervalUnion& j);

/// Probability that J holds an even number of bulk rG real eigenvalues:
/// 1/2 + 1/2 * gap_coalescence(j, sqrt(2/pi)).
double even_count_gap(const IntervalUnion& j);

/// Truncated generating function
///   1 + sum_{n=1}^{max_order} ((-xi)^n / n!) int_{(0,s)^n} rho_n
/// for the bulk rG process, each integral by tensor-product Gauss-Legendre
/// (order 24 per axis) reduced to the ordered simplex. Truncation error is
/// O(s^{(m+1)(m+2)/2}) at max_order = m. Requires 0 <= s <= 3, 0 <= xi <= 2,
/// 1 <= max_order <= 4. Deterministic independent of thread count.
double gap_truncated_gf(double s, double xi, int max_order);

/// Small-s expansion of E^{rG}(0;(0,s)) through s^15; valid on [0, 2.2].
double series_small_s(double s);

/// Small-s expansion of the annihilation spacing density at rho = 1,
/// through s^13; valid on [0, 1].
double series_small_s_spacing_annihilation(double s);

const PowerSeries& rg_gap_series();
const PowerSeries& annihilation_spacing_series();

/// Leading large-s form exp(-c1_tilde * s + c2),
/// c1_tilde = zeta(3/2)/(2 sqrt(2 pi)).
double asymptote_large_s(double s);

/// c2 = log 2 - 1/4 + (1/(4 pi)) sum_{n>=2} (1/n)(-pi + sum_{p=1}^{n-1} 1/sqrt(p(n-p))),
/// summed exactly to n = 20000 plus a fitted power-law tail; cached.
double c2_constant();

/// One term of the c2 series (without the 1/(4 pi) factor), n >= 2.
double c2_series_term(int n);

/// Exponential decay rate of E(J;xi):
///   -(1/(4 pi)) int log(1 - (2 xi - xi^2) exp(-k^2/2)) dk
/// (the 1/2 relative to the log-determinant reflects E^2 = det).
/// Requires 0 <= xi <= 2; the xi = 1 integrand's log singularity at k = 0 is
/// split off analytically.
double decay_rate_fourier(double xi);

/// Spacing density p0(s) = (1/rho) d^2/ds^2 E(0;(0,s)) by a central second
/// difference of gap_finite_n over total width s; requires s > 2*step > 0.
double spacing_density_finite_n(double s, int n_matrix, double step);

/// (pi/2) s exp(-pi s^2/4).
double wigner_surmise(double s);

namespace detail {
/// Pf[erfc] evaluated at raw endpoints with no ordering checks; the formula
/// is entire, so derivative oracles may evaluate it at unordered points.
double gap_coalescence_unchecked(std::span<const double> endpoints, double rho);
}  // namespace detail

}  // namespace gingap::gap
