#pragma once

#include <span>
#include <vector>

#include "gingap/stochastic.hpp"

namespace gingap::ref {

/// Serial reference for gap::gap_truncated_gf: plain nested loops, naive
/// left-to-right accumulation, no OpenMP. Kept for testing the parallel
/// kernel and for the benchmark.
double gap_truncated_gf(double s, double xi, int max_order);

/// Serial reference for stochastic::run_replicas: one replica after another
/// on the calling thread, same per-replica streams.
std::vector<stochastic::ParticleSystem> run_replicas(const stochastic::SimConfig& config,
                                                     stochastic::SimProcess process);

/// Serial reference for the c2 series sum to n_max (no tail estimate).
double c2_partial_sum(int n_max);

}  // namespace gingap::ref
