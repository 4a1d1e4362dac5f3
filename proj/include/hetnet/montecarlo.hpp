// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hetnet/model.hpp"

namespace hetnet {

struct SimConfig {
    long trials = 10'000;
    std::uint64_t seed = 1;
    double region_radius_m = 0.0;       ///< 0 selects the radius automatically
    std::vector<double> gamma_hat_grid;  ///< linear SIR thresholds
};

/// Auto radius: at least 1e4 expected BSs in the disc over all tiers and
/// 1e3 for the densest tier.
struct RegionChoice {
    double radius_m = 0.0;
    double expected_total = 0.0;
    double expected_densest = 0.0;
    bool automatic = false;
};

RegionChoice choose_region(NetworkModel const& model, double requested_radius_m);

struct TrialOutcome {
    double sir = 0.0;              ///< +inf when no interferer fell in the disc
    std::size_t serving_tier = 0;
    double serving_distance_m = 0.0;
    int redraws = 0;               ///< deployments discarded for having no BS
    std::vector<bool> success;     ///< sir >= gamma_hat_grid[i]
};

/// One deployment around the typical user at the origin. Each tier is a PPP
/// restricted to the disc, the user joins argmax_j P_j B_j r_j^-alpha, the
/// serving gain is Gamma(D_k, 1) and interfering gains Gamma(U_j, 1).
/// The random streams are keyed by (seed, trial), so trials are
/// reproducible in any execution order.
TrialOutcome run_trial(NetworkModel const& model, std::span<double const> gamma_hat_grid,
                       double region_radius_m, std::uint64_t seed, std::uint64_t trial);

struct SimulationReport {
    std::vector<double> gamma_hat;
    std::vector<double> ps_hat;
    std::vector<double> std_error;  ///< binomial standard error of ps_hat
    std::vector<double> association_freq;           ///< per tier
    std::vector<long> association_count;            ///< per tier
    std::vector<std::vector<double>> tier_success;  ///< [tier][threshold], NaN if no sample
    long trials_used = 0;
    long redraws = 0;
    std::uint64_t seed = 0;
    RegionChoice region;
};

/// Aggregates run_trial over trials 0..trials-1. Deterministic for a fixed
/// (model, config) regardless of thread count.
SimulationReport simulate_ps(NetworkModel const& model, SimConfig const& config);

}  // namespace hetnet
