// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "hetnet/model.hpp"

namespace hetnet {

enum class SeriesKind { QSeries, Reciprocal };

/// Finite prefix of a power series built for serving tier `tier_index` at
/// SIR threshold `gamma_hat` (linear scale).
struct SeriesCoefficients {
    std::vector<double> values;
    std::size_t tier_index = 0;
    double gamma_hat = 0.0;
    SeriesKind kind = SeriesKind::QSeries;
};

/// Coefficients q_0 .. q_{n-1} of F(z) for serving tier k:
///
///   q_i = sum_j lambda_j (P_j B_j)^delta * Gamma(U_j + i)/(Gamma(U_j) i!)
///         * delta/(delta - i) * x_j^i * 2F1(i - delta, U_j + i; i + 1 - delta; -x_j)
///
/// with x_j = U_k B_k gamma_hat / (U_j B_j). Tiers with zero density
/// contribute nothing. Guarantees q_0 > 0 and q_i < 0 for i >= 1.
SeriesCoefficients q_coefficients(NetworkModel const& model, std::size_t k,
                                  double gamma_hat, int n);

/// First `length` coefficients of 1 / F(z), via
///   t_0 = 1/q_0,  t_n = -(1/q_0) sum_{i<n} q_{n-i} t_i.
/// These equal the first column of the inverse lower-triangular Toeplitz
/// matrix built from q.
SeriesCoefficients reciprocal_series(SeriesCoefficients const& q, int length);

/// Success probability given association with tier k,
/// p_s(k) = A * sum_{n < D_k} t_n. Clamped to [0, 1].
/// Throws DomainError if tier k has zero density.
double ps_exact_tier(NetworkModel const& model, std::size_t k, double gamma_hat);

/// p_s(k) for every tier; NaN marks tiers with zero density.
std::vector<double> ps_exact_tiers(NetworkModel const& model, double gamma_hat);

/// p_s = sum_k A_k p_s(k).
double ps_exact(NetworkModel const& model, double gamma_hat);

/// Large-threshold form of p_s(k):
///   A gamma^-delta sinc(delta) (U_k B_k)^-delta Gamma(D_k+delta)/Gamma(D_k)
///     / sum_j lambda_j (P_j/U_j)^delta Gamma(U_j+delta)/Gamma(U_j).
/// Not clamped; exceeds 1 at small thresholds.
double ps_asymptotic_tier(NetworkModel const& model, std::size_t k, double gamma_hat);

std::vector<double> ps_asymptotic_tiers(NetworkModel const& model, double gamma_hat);

/// gamma^-delta sinc(delta) (c . lambda) / (d . lambda).
double ps_asymptotic(NetworkModel const& model, double gamma_hat);

/// gamma^-delta sinc(delta), the common prefactor of the asymptotic forms.
double asymptotic_scale(NetworkModel const& model, double gamma_hat);

}  // namespace hetnet
