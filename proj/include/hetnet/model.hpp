// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hetnet {

/// Parameters shared by every base station of one tier.
///
/// Densities are in BSs per km^2 throughout the public interface. The
/// coverage formulas only see density ratios, so the unit matters for ASE
/// reporting alone.
struct TierConfig {
    double lambda = 0.0;      ///< active density
    double lambda_max = 0.0;  ///< deployed density, upper bound for optimizers
    double power = 1.0;       ///< transmit power [W]
    double bias = 1.0;        ///< association bias B_k
    int antennas = 1;         ///< M_k
    int users = 1;            ///< U_k, served users per slot

    /// Shape of the serving-link gain under zero forcing, M_k - U_k + 1.
    [[nodiscard]] int diversity() const { return antennas - users + 1; }
};

/// Tier description before validation; lambda_max may be omitted.
struct RawTier {
    double lambda = 0.0;
    std::optional<double> lambda_max;
    double power = 1.0;
    double bias = 1.0;
    int antennas = 1;
    int users = 1;
};

struct RawNetwork {
    double alpha = 4.0;
    std::vector<RawTier> tiers;
};

/// Validated K-tier network. Immutable; derived quantities are computed
/// once at construction.
class NetworkModel {
public:
    [[nodiscard]] std::span<TierConfig const> tiers() const { return tiers_; }
    [[nodiscard]] TierConfig const& tier(std::size_t k) const { return tiers_.at(k); }
    [[nodiscard]] std::size_t size() const { return tiers_.size(); }
    [[nodiscard]] double alpha() const { return alpha_; }
    [[nodiscard]] double delta() const { return delta_; }
    /// A = sum_j lambda_j (P_j B_j)^delta.
    [[nodiscard]] double normalizer() const { return normalizer_; }

    [[nodiscard]] std::vector<double> densities() const;
    [[nodiscard]] std::vector<double> max_densities() const;

    /// Copy with replaced active densities. Each entry must lie in
    /// [0, lambda_max] and at least one must be positive.
    [[nodiscard]] NetworkModel with_densities(std::span<double const> lambda) const;
    /// Copy with lambda = lambda_max on every tier.
    [[nodiscard]] NetworkModel at_max_densities() const;

    /// Every tier unbiased (B_k = 1) and serving the same number of users.
    [[nodiscard]] bool is_unbiased_usdma() const;

    friend NetworkModel validate(RawNetwork const& raw);

private:
    NetworkModel() = default;
    void derive();

    std::vector<TierConfig> tiers_;
    double alpha_ = 4.0;
    double delta_ = 0.5;
    double normalizer_ = 0.0;
};

/// Checks the raw description and fills derived fields.
/// Throws ValidationError naming the offending tier and field.
NetworkModel validate(RawNetwork const& raw);

/// Probability that the typical user associates with each tier,
/// A_k = lambda_k (P_k B_k)^delta / A.
std::vector<double> association_probabilities(NetworkModel const& model);

/// Density-free coefficient vectors of the asymptotic forms:
///   p_s ~ gamma^-delta sinc(delta) (c . lambda) / (d . lambda)
///   ASE ~ gamma^-delta sinc(delta) log2(1 + gamma) (c1 . lambda)(c2 . lambda) / (d . lambda)
struct CoefficientVectors {
    std::vector<double> c;
    std::vector<double> d;
    std::vector<double> c1;
    std::vector<double> c2;
};

CoefficientVectors coefficient_vectors(NetworkModel const& model);

/// c_k / d_k = [Gamma(D_k + delta)/Gamma(D_k)] / [Gamma(U_k + delta)/Gamma(U_k)].
std::vector<double> reliability_ratios(NetworkModel const& model);

}  // namespace hetnet
