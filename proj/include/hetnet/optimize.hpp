// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hetnet/metrics.hpp"
#include "hetnet/model.hpp"

namespace hetnet {

/// Reliability ceiling check for a requirement theta.
struct Feasibility {
    bool feasible = false;
    PsMax ceiling;
};

/// Feasible iff theta < 1 and theta <= the best single-tier reliability.
Feasibility feasibility(NetworkModel const& model, double theta, double gamma_hat, PsMode mode);

/// Maximizes g.lambda over {0 <= lambda <= lambda_max, a.lambda >= 0}.
///
/// Starts from the box optimum and, if the halfspace is violated, moves
/// coordinates in increasing order of objective loss per unit of constraint
/// gain until a.lambda = 0 (fractional knapsack). Exact for this LP; ties
/// in the loss ratio are broken by index.
std::vector<double> solve_lp_box_halfspace(std::span<double const> g, std::span<double const> a,
                                           std::span<double const> lambda_max);

struct DinkelbachStep {
    int restart = 0;
    int outer = 0;
    double t = 0.0;         ///< ratio N/d.lambda the subproblems were solved at
    double residual = 0.0;  ///< N(lambda*) - t d.lambda* after the inner loop
    int scp_steps = 0;
};

struct ScpStep {
    int restart = 0;
    int outer = 0;
    int inner = 0;
    std::vector<double> lambda;  ///< LP solution of this step
    double step = 0.0;           ///< ||lambda* - lambda^(n)|| / ||lambda^(n)||
};

struct OptimizationTrace {
    std::vector<DinkelbachStep> dinkelbach;
    std::vector<ScpStep> scp;
    /// Tiers reduced by the greedy U-SDMA solver, in the order visited.
    std::vector<std::size_t> reduction_order;
    /// Restarts whose iterates collapsed to the all-zero density vector.
    std::vector<int> collapsed_restarts;
    bool used_anchor_start = false;
    std::uint64_t seed = 0;
};

struct OptimizationResult {
    std::vector<double> lambda;  ///< per km^2; empty when infeasible
    double ase = 0.0;            ///< bit/s/Hz per km^2
    double ps = 0.0;             ///< reliability under the solver's model
    double ps_exact = -1.0;      ///< exact re-score when requested, else -1
    bool feasible = false;
    bool converged = true;
    int restarts = 0;
    int best_restart = -1;
    OptimizationTrace trace;

    [[nodiscard]] double ase_per_m2() const { return ase * 1e-6; }
};

/// Greedy exact solver for unbiased U-SDMA networks. Works on y_k =
/// p_s(k) lambda_k with constraint weights b_k = (P_k/U)^delta (1 - theta/p_s(k));
/// tiers are zeroed in ascending b_k order and the last one is set so the
/// constraint binds. ASE and reliability use the exact per-tier p_s.
OptimizationResult optimize_usdma(NetworkModel const& model, double theta, double gamma_hat);

struct GeneralOptions {
    int restarts = 20;
    double epsilon = 1e-6;
    int max_iters = 1000;
    std::uint64_t seed = 1;
    bool rescore_exact = false;
};

/// Dinkelbach iteration on the asymptotic ASE ratio with sequential
/// linearization of the numerator; each subproblem is the box/halfspace LP.
/// Local method: restarts from uniform random points in the box and keeps
/// the best objective (lowest restart index on ties).
OptimizationResult optimize_general(NetworkModel const& model, double theta, double gamma_hat,
                                    GeneralOptions const& options = {});

/// N(lambda) = (c1.lambda)(c2.lambda) and its gradient.
double scp_numerator(std::span<double const> c1, std::span<double const> c2,
                     std::span<double const> lambda);
std::vector<double> scp_numerator_gradient(std::span<double const> c1,
                                           std::span<double const> c2,
                                           std::span<double const> lambda);

/// Exhaustive search on the grid lambda_k = i * lambda_max_k / resolution,
/// i = 0..resolution. Asymptotic mode scores with the quadratic-over-linear
/// ASE and asymptotic reliability; exact mode requires an unbiased U-SDMA
/// network (whose per-tier p_s is density-free). Needs K <= 4, resolution >= 50.
OptimizationResult grid_search_oracle(NetworkModel const& model, double theta, double gamma_hat,
                                      int resolution, PsMode mode = PsMode::Asymptotic);

}  // namespace hetnet
