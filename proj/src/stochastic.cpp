#include "gingap/stochastic.hpp"

#include <omp.h>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "gingap/constants.hpp"
#include "gingap/rng.hpp"

namespace gingap::stochastic {

void SimConfig::validate() const {
  if (lattice_size < 4) throw std::invalid_argument("SimConfig: lattice_size must be >= 4");
  if (!(initial_fill > 0.0 && initial_fill <= 1.0))
    throw std::invalid_argument("SimConfig: initial_fill must be in (0, 1]");
  if (!(t_end >= 0.0)) throw std::invalid_argument("SimConfig: t_end must be >= 0");
  if (replicas < 1) throw std::invalid_argument("SimConfig: replicas must be >= 1");
}

namespace {

// occupancy-indexed lattice state; slots are compacted on removal
class LatticeSim {
 public:
  LatticeSim(std::size_t lattice, SimProcess process, rng::Xoshiro256pp stream)
      : L_(static_cast<std::int64_t>(lattice)), occ_(lattice, -1), process_(process),
        rng_(stream) {}

  void fill_bernoulli(double fill) {
    for (std::int64_t site = 0; site < L_; ++site)
      if (rng_.bernoulli(fill)) place(site);
  }

  void load(const std::vector<std::int64_t>& positions) {
    for (auto site : positions) place(site);
  }

  void evolve_to(double t_target) {
    while (!pos_.empty()) {
      const double rate = static_cast<double>(pos_.size());
      const double dt = -std::log(rng_.uniform_pos()) / rate;
      if (time_ + dt > t_target) break;
      time_ += dt;
      step();
    }
    time_ = t_target;
  }

  std::vector<std::int64_t> sorted_positions() const {
    std::vector<std::int64_t> p = pos_;
    std::sort(p.begin(), p.end());
    return p;
  }

  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

 private:
  void place(std::int64_t site) {
    occ_[static_cast<std::size_t>(site)] = static_cast<std::int32_t>(pos_.size());
    pos_.push_back(site);
  }

  void remove(std::int32_t slot) {
    occ_[static_cast<std::size_t>(pos_[static_cast<std::size_t>(slot)])] = -1;
    const auto last = static_cast<std::int32_t>(pos_.size() - 1);
    if (slot != last) {
      pos_[static_cast<std::size_t>(slot)] = pos_[static_cast<std::size_t>(last)];
      occ_[static_cast<std::size_t>(pos_[static_cast<std::size_t>(slot)])] = slot;
    }
    pos_.pop_back();
  }

  void step() {
    const auto slot = static_cast<std::int32_t>(rng_.bounded(pos_.size()));
    const std::int64_t site = pos_[static_cast<std::size_t>(slot)];
    std::int64_t target = site + ((rng_.next() & 1u) ? 1 : -1);
    if (target < 0) target += L_;
    else if (target >= L_) target -= L_;
    const std::int32_t other = occ_[static_cast<std::size_t>(target)];
    if (other < 0) {
      occ_[static_cast<std::size_t>(site)] = -1;
      occ_[static_cast<std::size_t>(target)] = slot;
      pos_[static_cast<std::size_t>(slot)] = target;
    } else if (process_ == SimProcess::Annihilation) {
      // remove the higher slot first so the other index stays valid
      remove(std::max(slot, other));
      remove(std::min(slot, other));
    } else {
      remove(slot);  // merge: the occupant of target survives
    }
  }

  std::int64_t L_;
  std::vector<std::int32_t> occ_;
  std::vector<std::int64_t> pos_;
  SimProcess process_;
  rng::Xoshiro256pp rng_;
  double time_ = 0.0;
};

ParticleSystem make_system(const LatticeSim& sim, SimProcess process, std::size_t lattice) {
  ParticleSystem ps;
  ps.positions = sim.sorted_positions();
  ps.time = sim.time();
  ps.process = process;
  ps.lattice_size = lattice;
  return ps;
}

}  // namespace

namespace detail {

ParticleSystem simulate_replica(const SimConfig& config, SimProcess process,
                                std::uint64_t replica_index) {
  config.validate();
  LatticeSim sim(config.lattice_size, process, rng::replica_stream(config.seed, replica_index));
  sim.fill_bernoulli(config.initial_fill);
  sim.evolve_to(config.t_end);
  return make_system(sim, process, config.lattice_size);
}

}  // namespace detail

ParticleSystem simulate(const SimConfig& config, SimProcess process) {
  return detail::simulate_replica(config, process, 0);
}

ParticleSystem evolve(ParticleSystem ps, double t_target, std::uint64_t seed) {
  if (t_target < ps.time) throw std::invalid_argument("evolve: t_target before current time");
  LatticeSim sim(ps.lattice_size, ps.process, rng::Xoshiro256pp(seed));
  sim.load(ps.positions);
  sim.set_time(ps.time);
  sim.evolve_to(t_target);
  return make_system(sim, ps.process, ps.lattice_size);
}

namespace {

struct ReplicaRun {
  ParticleSystem half;
  ParticleSystem full;
};

std::vector<ReplicaRun> run_replicas_with_half(const SimConfig& config, SimProcess process) {
  config.validate();
  std::vector<ReplicaRun> out(config.replicas);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(config.replicas); ++r) {
    LatticeSim sim(config.lattice_size, process,
                   rng::replica_stream(config.seed, static_cast<std::uint64_t>(r)));
    sim.fill_bernoulli(config.initial_fill);
    sim.evolve_to(config.t_end / 2.0);
    out[static_cast<std::size_t>(r)].half = make_system(sim, process, config.lattice_size);
    sim.evolve_to(config.t_end);
    out[static_cast<std::size_t>(r)].full = make_system(sim, process, config.lattice_size);
  }
  return out;
}

}  // namespace

std::vector<ParticleSystem> run_replicas(const SimConfig& config, SimProcess process) {
  config.validate();
  std::vector<ParticleSystem> out(config.replicas);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(config.replicas); ++r)
    out[static_cast<std::size_t>(r)] =
        detail::simulate_replica(config, process, static_cast<std::uint64_t>(r));
  return out;
}

namespace detail {

double gap_window_fraction(const ParticleSystem& ps, double window) {
  const auto& p = ps.positions;
  const double L = static_cast<double>(ps.lattice_size);
  if (p.empty()) return 1.0;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    acc += std::max(0.0, static_cast<double>(p[i + 1] - p[i]) - window);
  acc += std::max(0.0, static_cast<double>(ps.lattice_size - (p.back() - p.front())) - window);
  return acc / L;
}

double even_count_window_fraction(const ParticleSystem& ps, double window) {
  const auto& p = ps.positions;
  const double L = static_cast<double>(ps.lattice_size);
  if (p.empty()) return 1.0;
  if (window >= L) throw std::invalid_argument("even_count_window_fraction: window >= lattice");
  // windows [u, u+window): parity of the count flips when u crosses a
  // particle (it leaves) or (p - window) mod L (it enters)
  const std::size_t m = p.size();
  std::vector<double> flips;
  flips.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    const double site = static_cast<double>(p[i]);
    flips.push_back(site);
    double enter = site - window;
    if (enter < 0.0) enter += L;
    flips.push_back(enter);
  }
  std::sort(flips.begin(), flips.end());
  // count in the window starting at u = 0
  std::size_t start_count = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (static_cast<double>(p[i]) < window) ++start_count;
  bool even = (start_count % 2 == 0);
  double prev = 0.0;
  double measure = 0.0;
  for (double u : flips) {
    if (even) measure += u - prev;
    prev = u;
    even = !even;
  }
  if (even) measure += L - prev;
  return measure / L;
}

}  // namespace detail

namespace {

EmpiricalGap window_estimates(std::span<const ParticleSystem> systems, double target_rho,
                              std::span<const double> s_grid,
                              double (*fraction)(const ParticleSystem&, double)) {
  if (systems.empty()) throw std::invalid_argument("window_estimates: no systems");
  if (!(target_rho > 0.0)) throw std::invalid_argument("window_estimates: target_rho <= 0");
  std::size_t total = 0;
  for (const auto& ps : systems) total += ps.positions.size();
  const double lattice_total = std::accumulate(
      systems.begin(), systems.end(), 0.0,
      [](double a, const ParticleSystem& ps) { return a + static_cast<double>(ps.lattice_size); });
  const double density = static_cast<double>(total) / lattice_total;
  if (density <= 0.0) throw std::invalid_argument("window_estimates: empty ensemble");
  const double stretch = target_rho / density;  // window in lattice units = s * stretch

  EmpiricalGap out;
  out.s_grid.assign(s_grid.begin(), s_grid.end());
  out.samples = systems.size();
  out.e_hat.resize(s_grid.size());
  out.stderrs.resize(s_grid.size());
  const double r = static_cast<double>(systems.size());
  for (std::size_t k = 0; k < s_grid.size(); ++k) {
    const double window = s_grid[k] * stretch;
    double mean = 0.0, m2 = 0.0;
    for (const auto& ps : systems) {
      const double q = fraction(ps, window);
      mean += q;
      m2 += q * q;
    }
    mean /= r;
    const double var = systems.size() > 1 ? std::max(0.0, (m2 - r * mean * mean) / (r - 1.0)) : 0.0;
    out.e_hat[k] = mean;
    out.stderrs[k] = std::sqrt(var / r);
  }
  return out;
}

}  // namespace

EmpiricalGap estimate_gap_windows(std::span<const ParticleSystem> systems, double target_rho,
                                  std::span<const double> s_grid) {
  return window_estimates(systems, target_rho, s_grid, &detail::gap_window_fraction);
}

EmpiricalGap estimate_even_count_windows(std::span<const ParticleSystem> systems,
                                         double target_rho, std::span<const double> s_grid) {
  return window_estimates(systems, target_rho, s_grid, &detail::even_count_window_fraction);
}

namespace {

EmpiricalGap estimate_with_equilibration(const SimConfig& config, SimProcess process,
                                         std::span<const double> s_grid, bool even_count) {
  const double target_rho =
      (process == SimProcess::Annihilation) ? kInvSqrt2Pi : kSqrt2OverPi;
  auto runs = run_replicas_with_half(config, process);
  std::vector<ParticleSystem> half, full;
  half.reserve(runs.size());
  full.reserve(runs.size());
  for (auto& run : runs) {
    half.push_back(std::move(run.half));
    full.push_back(std::move(run.full));
  }

  double mean_density = 0.0;
  for (const auto& ps : full) mean_density += ps.density();
  mean_density /= static_cast<double>(full.size());
  if (mean_density > 0.1 * config.initial_fill)
    throw EquilibrationError("estimate_gap: density above 10% of initial fill at t_end; "
                             "increase t_end");

  auto fraction = even_count ? &detail::even_count_window_fraction : &detail::gap_window_fraction;
  EmpiricalGap est = window_estimates(full, target_rho, s_grid, fraction);

  // stability across the 2x time doubling at a mid-grid reference s, judged
  // against the paired per-replica drift's own standard error
  const std::size_t ref = s_grid.size() / 2;
  double dens_h = 0.0;
  for (const auto& ps : half) dens_h += ps.density();
  dens_h /= static_cast<double>(half.size());
  const double wf = s_grid[ref] * target_rho / mean_density;
  const double wh = s_grid[ref] * target_rho / dens_h;
  double drift = 0.0;
  std::vector<double> diffs(full.size());
  for (std::size_t i = 0; i < full.size(); ++i) {
    diffs[i] = fraction(full[i], wf) - fraction(half[i], wh);
    drift += diffs[i];
  }
  drift /= static_cast<double>(diffs.size());
  double var = 0.0;
  for (double v : diffs) var += (v - drift) * (v - drift);
  const double nrep = static_cast<double>(diffs.size());
  const double se_drift = diffs.size() > 1 ? std::sqrt(var / (nrep * (nrep - 1.0))) : 0.0;
  const double tol = std::max({est.stderrs[ref], 3.0 * se_drift, 1e-4});
  if (std::abs(drift) > tol)
    throw EquilibrationError("estimate_gap: estimate not stable across 2x time doubling; "
                             "increase t_end");
  return est;
}

}  // namespace

EmpiricalGap estimate_gap(const SimConfig& config, SimProcess process,
                          std::span<const double> s_grid) {
  if (s_grid.empty()) throw std::invalid_argument("estimate_gap: empty s grid");
  return estimate_with_equilibration(config, process, s_grid, false);
}

EmpiricalGap even_count_estimate(const SimConfig& config, std::span<const double> s_grid) {
  if (s_grid.empty()) throw std::invalid_argument("even_count_estimate: empty s grid");
  return estimate_with_equilibration(config, SimProcess::Annihilation, s_grid, true);
}

ParticleSystem thin(const ParticleSystem& ps, double keep_prob, std::uint64_t seed) {
  if (!(keep_prob > 0.0 && keep_prob <= 1.0))
    throw std::invalid_argument("thin: keep_prob must be in (0, 1]");
  ParticleSystem out = ps;
  if (keep_prob == 1.0) return out;
  out.positions.clear();
  rng::Xoshiro256pp stream(seed);
  for (auto site : ps.positions)
    if (stream.bernoulli(keep_prob)) out.positions.push_back(site);
  return out;
}

GinibreSample sample_ginibre_real_eigs(int n, std::uint64_t seed) {
  if (n < 2 || n > 400) throw std::domain_error("sample_ginibre_real_eigs: n must be in [2, 400]");
  rng::Xoshiro256pp stream(seed);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = stream.normal();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw EigensolverError("sample_ginibre_real_eigs: eigensolver did not converge");
  const double threshold = 1e-8 * std::sqrt(static_cast<double>(n));
  GinibreSample out;
  out.n = n;
  out.seed = seed;
  const auto& ev = solver.eigenvalues();
  for (int i = 0; i < ev.size(); ++i)
    if (std::abs(ev[i].imag()) <= threshold) out.real_eigenvalues.push_back(ev[i].real());
  std::sort(out.real_eigenvalues.begin(), out.real_eigenvalues.end());
  return out;
}

GinibreEnsembleStats ginibre_real_counts(int n, std::size_t replicas, std::uint64_t seed) {
  std::vector<int> counts(replicas, -1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(replicas); ++r) {
    std::uint64_t st = seed;
    rng::splitmix64(st);
    st ^= 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(r) + 1);
    try {
      const GinibreSample sample = sample_ginibre_real_eigs(n, st);
      counts[static_cast<std::size_t>(r)] = static_cast<int>(sample.real_eigenvalues.size());
    } catch (const EigensolverError&) {
      counts[static_cast<std::size_t>(r)] = -1;  // skipped
    }
  }
  GinibreEnsembleStats stats;
  for (int c : counts) {
    if (c < 0) ++stats.skipped;
    else stats.real_counts.push_back(c);
  }
  double mean = 0.0;
  for (int c : stats.real_counts) mean += c;
  const double r = static_cast<double>(stats.real_counts.size());
  mean /= r;
  double var = 0.0;
  for (int c : stats.real_counts) var += (c - mean) * (c - mean);
  var = r > 1 ? var / (r - 1.0) : 0.0;
  stats.mean_count = mean;
  stats.stderr_count = std::sqrt(var / r);
  return stats;
}

EmpiricalGap ginibre_gap_estimate(int n, std::size_t replicas, std::uint64_t seed,
                                  std::span<const double> s_grid) {
  if (s_grid.empty()) throw std::invalid_argument("ginibre_gap_estimate: empty s grid");
  std::vector<std::vector<std::uint8_t>> empty_flags(
      s_grid.size(), std::vector<std::uint8_t>(replicas, 0));
  std::vector<std::uint8_t> skipped(replicas, 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(replicas); ++r) {
    std::uint64_t st = seed;
    rng::splitmix64(st);
    st ^= 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(r) + 1);
    try {
      const GinibreSample sample = sample_ginibre_real_eigs(n, st);
      for (std::size_t k = 0; k < s_grid.size(); ++k) {
        const double hw = s_grid[k] / 2.0;
        bool empty = true;
        for (double lambda : sample.real_eigenvalues)
          if (lambda > -hw && lambda < hw) { empty = false; break; }
        empty_flags[k][static_cast<std::size_t>(r)] = empty ? 1 : 0;
      }
    } catch (const EigensolverError&) {
      skipped[static_cast<std::size_t>(r)] = 1;
    }
  }
  EmpiricalGap out;
  out.s_grid.assign(s_grid.begin(), s_grid.end());
  out.e_hat.resize(s_grid.size());
  out.stderrs.resize(s_grid.size());
  std::size_t kept = 0;
  for (std::size_t r = 0; r < replicas; ++r)
    if (!skipped[r]) ++kept;
  if (kept == 0) throw EigensolverError("ginibre_gap_estimate: all replicas failed");
  out.samples = kept;
  for (std::size_t k = 0; k < s_grid.size(); ++k) {
    double hits = 0.0;
    for (std::size_t r = 0; r < replicas; ++r)
      if (!skipped[r] && empty_flags[k][r]) hits += 1.0;
    const double p = hits / static_cast<double>(kept);
    out.e_hat[k] = p;
    out.stderrs[k] = std::sqrt(p * (1.0 - p) / static_cast<double>(kept));
  }
  return out;
}

}  // namespace gingap::stochastic
