#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gingap::stochastic {

enum class SimProcess { Annihilation, Coalescence };

/// Continuous-time nearest-neighbour random walkers on a periodic lattice;
/// each particle jumps +-1 at total rate 1, colliding pairs annihilate or
/// merge. Positions are kept sorted between evolutions.
struct ParticleSystem {
  std::vector<std::int64_t> positions;
  double time = 0.0;
  SimProcess process = SimProcess::Annihilation;
  std::size_t lattice_size = 0;

  double density() const {
    return lattice_size ? static_cast<double>(positions.size()) / static_cast<double>(lattice_size)
                        : 0.0;
  }
};

struct SimConfig {
  std::size_t lattice_size = 100000;
  double initial_fill = 0.3;
  double t_end = 1000.0;
  std::uint64_t seed = 0;
  std::size_t replicas = 200;

  void validate() const;
};

/// Gap (or even-count) probability estimates on a rescaled s-grid with
/// replica-cluster standard errors.
struct EmpiricalGap {
  std::vector<double> s_grid;
  std::vector<double> e_hat;
  std::vector<double> stderrs;
  std::size_t samples = 0;
};

struct GinibreSample {
  int n = 0;
  std::vector<double> real_eigenvalues;  // sorted
  std::uint64_t seed = 0;
};

class EquilibrationError : public std::runtime_error {
 public:
  explicit EquilibrationError(const std::string& what) : std::runtime_error(what) {}
};

class EigensolverError : public std::runtime_error {
 public:
  explicit EigensolverError(const std::string& what) : std::runtime_error(what) {}
};

/// One trajectory from a Bernoulli(initial_fill) start, evolved to t_end.
/// Deterministic given config.seed.
ParticleSystem simulate(const SimConfig& config, SimProcess process);

/// Continue an existing trajectory to t_target with a fresh stream.
ParticleSystem evolve(ParticleSystem ps, double t_target, std::uint64_t seed);

/// config.replicas independent trajectories (parallel; replica r uses the
/// stream derived from (seed, r), so results are thread-count independent).
std::vector<ParticleSystem> run_replicas(const SimConfig& config, SimProcess process);

/// Pure estimator: rescales the systems' positions so the ensemble density
/// equals target_rho, then for each s returns the exact continuous-
/// translation average of P(no particle in a length-s window), with
/// replica-cluster standard errors.
EmpiricalGap estimate_gap_windows(std::span<const ParticleSystem> systems, double target_rho,
                                  std::span<const double> s_grid);

/// Same, for P(window holds an even particle count).
EmpiricalGap estimate_even_count_windows(std::span<const ParticleSystem> systems,
                                         double target_rho, std::span<const double> s_grid);

/// Full pipeline with equilibration control: runs replicas to t_end (with a
/// half-time snapshot), requires the ensemble density to drop below 10% of
/// initial_fill and the mid-grid estimate to be stable across the 2x time
/// doubling; throws EquilibrationError otherwise. Rescales to target
/// rho = 1/sqrt(2 pi) for annihilation and sqrt(2/pi) for coalescence.
EmpiricalGap estimate_gap(const SimConfig& config, SimProcess process,
                          std::span<const double> s_grid);

/// Even-count probabilities for the annihilation process at rho = 1/sqrt(2 pi),
/// same equilibration control as estimate_gap.
EmpiricalGap even_count_estimate(const SimConfig& config, std::span<const double> s_grid);

/// Independent Bernoulli(keep_prob) retention of each particle.
ParticleSystem thin(const ParticleSystem& ps, double keep_prob, std::uint64_t seed);

/// Real eigenvalues of an n x n matrix of iid standard Gaussians, via a
/// dense real nonsymmetric eigensolver; eigenvalues with
/// |Im| <= 1e-8 sqrt(n) count as real. Throws EigensolverError on
/// convergence failure. 2 <= n <= 400.
GinibreSample sample_ginibre_real_eigs(int n, std::uint64_t seed);

struct GinibreEnsembleStats {
  std::vector<int> real_counts;  // per surviving replica
  std::size_t skipped = 0;       // eigensolver failures
  double mean_count = 0.0;
  double stderr_count = 0.0;
};

/// Real-eigenvalue counts over replicas (parallel, per-replica streams).
GinibreEnsembleStats ginibre_real_counts(int n, std::size_t replicas, std::uint64_t seed);

/// Empirical E(0;(-s/2,s/2)) over replicas: fraction with no real eigenvalue
/// in the centred window, binomial standard errors.
EmpiricalGap ginibre_gap_estimate(int n, std::size_t replicas, std::uint64_t seed,
                                  std::span<const double> s_grid);

namespace detail {
/// Continuous-translation window averages for one system (positions need not
/// be rescaled; window is in lattice units).
double gap_window_fraction(const ParticleSystem& ps, double window);
double even_count_window_fraction(const ParticleSystem& ps, double window);
/// One replica's trajectory under the (seed, replica_index) stream.
ParticleSystem simulate_replica(const SimConfig& config, SimProcess process,
                                std::uint64_t replica_index);
}  // namespace detail

}  // namespace gingap::stochastic
