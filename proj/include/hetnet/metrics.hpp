// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hetnet/model.hpp"

namespace hetnet {

enum class PsMode { Exact, Asymptotic };

/// One point of the ASE vs. reliability tradeoff. ASE per km^2.
struct TradeoffPoint {
    double theta = 0.0;
    std::vector<double> lambda;
    double ase = 0.0;
    double ps = 0.0;
    bool feasible = false;

    [[nodiscard]] double ase_per_m2() const { return ase * 1e-6; }
};

/// sum_k lambda_k U_k p_s(k) log2(1 + gamma_hat), bit/s/Hz per km^2.
/// Entries of ps_per_tier for zero-density tiers are not read.
double ase(NetworkModel const& model, double gamma_hat, std::span<double const> ps_per_tier);

/// Quadratic-over-linear large-threshold ASE, bit/s/Hz per km^2.
double ase_asymptotic(NetworkModel const& model, double gamma_hat);

/// Sign of d(c.lambda / d.lambda)/d lambda_i at the model's densities.
/// Zero when the numerator vanishes to rounding.
std::vector<int> monotonicity_signs(NetworkModel const& model);

struct PsMax {
    double value = 0.0;
    std::size_t tier = 0;
    bool tied = false;  ///< another eligible tier attains the same score
};

/// Highest reliability reachable by any density vector in the box, and the
/// tier whose lone activation reaches it. Tiers with lambda_max = 0 cannot
/// be activated and are skipped.
///
/// Asymptotic mode scores tiers by c_k/d_k. Exact mode scores them by M_k and
/// is only defined for unbiased U-SDMA networks; elsewhere it throws
/// DomainError.
PsMax ps_max(NetworkModel const& model, double gamma_hat, PsMode mode);

}  // namespace hetnet
