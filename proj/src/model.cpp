// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#include "hetnet/model.hpp"

#include <cmath>
#include <sstream>

#include "hetnet/error.hpp"
#include "hetnet/specfun.hpp"

namespace hetnet {

namespace {

[[noreturn]] void reject_tier(std::size_t k, std::string const& what)
{
    std::ostringstream os;
    os << "tier " << k + 1 << ": " << what;
    throw ValidationError(os.str());
}

void check_tier(std::size_t k, TierConfig const& t)
{
    if (!std::isfinite(t.lambda) || t.lambda < 0.0) reject_tier(k, "density must be >= 0");
    if (!std::isfinite(t.lambda_max) || t.lambda_max < t.lambda) {
        reject_tier(k, "lambda_max must be >= lambda");
    }
    if (!std::isfinite(t.power) || !(t.power > 0.0)) reject_tier(k, "power must be positive");
    if (!std::isfinite(t.bias) || !(t.bias > 0.0)) reject_tier(k, "bias must be positive");
    if (t.antennas < 1) reject_tier(k, "antennas must be >= 1");
    if (t.users < 1) reject_tier(k, "users must be >= 1");
    if (t.users > t.antennas) reject_tier(k, "users must not exceed antennas (zero forcing)");
}

}  // namespace

void NetworkModel::derive()
{
    delta_ = 2.0 / alpha_;
    normalizer_ = 0.0;
    bool any_active = false;
    for (auto const& t : tiers_) {
        if (t.lambda > 0.0) any_active = true;
        normalizer_ += t.lambda * std::pow(t.power * t.bias, delta_);
    }
    if (!any_active) throw ValidationError("degenerate network: every tier has zero density");
}

NetworkModel validate(RawNetwork const& raw)
{
    if (!std::isfinite(raw.alpha) || !(raw.alpha > 2.0)) {
        throw ValidationError("alpha must exceed 2");
    }
    if (raw.tiers.empty()) throw ValidationError("network needs at least one tier");

    NetworkModel m;
    m.alpha_ = raw.alpha;
    m.tiers_.reserve(raw.tiers.size());
    for (std::size_t k = 0; k < raw.tiers.size(); ++k) {
        auto const& r = raw.tiers[k];
        TierConfig t;
        t.lambda = r.lambda;
        t.lambda_max = r.lambda_max.value_or(r.lambda);
        t.power = r.power;
        t.bias = r.bias;
        t.antennas = r.antennas;
        t.users = r.users;
        check_tier(k, t);
        m.tiers_.push_back(t);
    }
    m.derive();
    return m;
}

std::vector<double> NetworkModel::densities() const
{
    std::vector<double> out;
    out.reserve(tiers_.size());
    for (auto const& t : tiers_) out.push_back(t.lambda);
    return out;
}

std::vector<double> NetworkModel::max_densities() const
{
    std::vector<double> out;
    out.reserve(tiers_.size());
    for (auto const& t : tiers_) out.push_back(t.lambda_max);
    return out;
}

NetworkModel NetworkModel::with_densities(std::span<double const> lambda) const
{
    if (lambda.size() != tiers_.size()) {
        throw ValidationError("density vector length does not match tier count");
    }
    NetworkModel m = *this;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        m.tiers_[k].lambda = lambda[k];
        check_tier(k, m.tiers_[k]);
    }
    m.derive();
    return m;
}

NetworkModel NetworkModel::at_max_densities() const
{
    auto const lmax = max_densities();
    return with_densities(lmax);
}

bool NetworkModel::is_unbiased_usdma() const
{
    for (auto const& t : tiers_) {
        if (t.bias != 1.0 || t.users != tiers_.front().users) return false;
    }
    return true;
}

std::vector<double> association_probabilities(NetworkModel const& model)
{
    std::vector<double> out;
    out.reserve(model.size());
    double const a = model.normalizer();
    for (auto const& t : model.tiers()) {
        out.push_back(t.lambda * std::pow(t.power * t.bias, model.delta()) / a);
    }
    return out;
}

CoefficientVectors coefficient_vectors(NetworkModel const& model)
{
    double const delta = model.delta();
    CoefficientVectors v;
    for (auto const& t : model.tiers()) {
        double const per_user = std::pow(t.power / t.users, delta);
        double const link_gain = specfun::gamma_ratio(t.diversity(), delta);
        double const mux_gain = specfun::gamma_ratio(t.users, delta);
        v.c.push_back(per_user * link_gain);
        v.d.push_back(per_user * mux_gain);
        v.c1.push_back(std::pow(t.power * t.bias, delta));
        v.c2.push_back(std::pow(static_cast<double>(t.users), 1.0 - delta)
                       * std::pow(t.bias, -delta) * link_gain);
    }
    return v;
}

std::vector<double> reliability_ratios(NetworkModel const& model)
{
    std::vector<double> out;
    for (auto const& t : model.tiers()) {
        out.push_back(specfun::gamma_ratio(t.diversity(), model.delta())
                      / specfun::gamma_ratio(t.users, model.delta()));
    }
    return out;
}

}  // namespace hetnet
