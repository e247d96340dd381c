#include "gingap/reference.hpp"

#include <cmath>
#include <stdexcept>

#include "gingap/correlations.hpp"
#include "gingap/gap.hpp"
#include "gingap/kernels.hpp"
#include "gingap/quadrature.hpp"

namespace gingap::ref {

namespace {

// ordered-simplex integral of rho_n via the same cube map as the parallel
// kernel, but with plain nested index arithmetic and a running sum
double simplex_integral_serial(double s, int n, const kernels::KernelParams& p) {
  constexpr int kOrder = 24;
  const auto& rule = quadrature::gauss_legendre(kOrder);
  double node[kOrder], weight[kOrder];
  for (int i = 0; i < kOrder; ++i) {
    node[i] = 0.5 * (rule.nodes[i] + 1.0);
    weight[i] = 0.5 * rule.weights[i];
  }
  long total = 1;
  for (int k = 0; k < n; ++k) total *= kOrder;
  double sum = 0.0;
  for (long flat = 0; flat < total; ++flat) {
    long rem = flat;
    double w = 1.0;
    double xs[8];
    double prod = 1.0;
    for (int k = n - 1; k >= 0; --k) {
      const int idx = static_cast<int>(rem % kOrder);
      rem /= kOrder;
      const double t = node[idx];
      w *= weight[idx] * std::pow(t, k);
      prod *= t;
      xs[k] = s * prod;
    }
    sum += w * correlations::detail::rho_n_unchecked(std::span<const double>(xs, n), p);
  }
  return sum * std::pow(s, n);
}

}  // namespace

double gap_truncated_gf(double s, double xi, int max_order) {
  if (!(s >= 0.0 && s <= 3.0)) throw std::domain_error("ref::gap_truncated_gf: s outside [0, 3]");
  if (!(xi >= 0.0 && xi <= 2.0))
    throw std::domain_error("ref::gap_truncated_gf: xi outside [0, 2]");
  if (max_order < 1 || max_order > 4)
    throw std::domain_error("ref::gap_truncated_gf: max_order must be in 1..4");
  if (s == 0.0) return 1.0;
  const auto p = kernels::KernelParams::real_ginibre_bulk();
  double result = 1.0;
  double xin = 1.0;
  for (int n = 1; n <= max_order; ++n) {
    xin *= -xi;
    result += xin * simplex_integral_serial(s, n, p);
  }
  return result;
}

std::vector<stochastic::ParticleSystem> run_replicas(const stochastic::SimConfig& config,
                                                     stochastic::SimProcess process) {
  config.validate();
  std::vector<stochastic::ParticleSystem> out;
  out.reserve(config.replicas);
  // replica r's stream is addressed by (seed, r) regardless of who runs it
  for (std::size_t r = 0; r < config.replicas; ++r)
    out.push_back(stochastic::detail::simulate_replica(config, process, r));
  return out;
}

double c2_partial_sum(int n_max) {
  double sum = 0.0;
  for (int n = n_max; n >= 2; --n) sum += gap::c2_series_term(n);
  return sum;
}

}  // namespace gingap::ref
