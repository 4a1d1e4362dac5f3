// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#include "hetnet/metrics.hpp"

#include <cmath>
#include <vector>

#include "hetnet/coverage.hpp"
#include "hetnet/error.hpp"

namespace hetnet {

double ase(NetworkModel const& model, double gamma_hat, std::span<double const> ps_per_tier)
{
    if (ps_per_tier.size() != model.size()) {
        throw DomainError("ase: per-tier success vector length does not match tier count");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < model.size(); ++k) {
        auto const& t = model.tier(k);
        if (t.lambda == 0.0) continue;
        sum += t.lambda * t.users * ps_per_tier[k];
    }
    return sum * std::log2(1.0 + gamma_hat);
}

double ase_asymptotic(NetworkModel const& model, double gamma_hat)
{
    auto const v = coefficient_vectors(model);
    double a = 0.0;
    double b = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < model.size(); ++k) {
        double const l = model.tier(k).lambda;
        a += v.c1[k] * l;
        b += v.c2[k] * l;
        den += v.d[k] * l;
    }
    return asymptotic_scale(model, gamma_hat) * std::log2(1.0 + gamma_hat) * a * b / den;
}

std::vector<int> monotonicity_signs(NetworkModel const& model)
{
    auto const v = coefficient_vectors(model);
    auto const ratio = reliability_ratios(model);
    std::size_t const n = model.size();

    std::vector<int> signs(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        double num = 0.0;
        double scale = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double const w = v.d[i] * v.d[j] * model.tier(j).lambda;
            num += w * (ratio[i] - ratio[j]);
            scale += w * (ratio[i] + ratio[j]);
        }
        if (std::abs(num) <= 1e-14 * scale) continue;
        signs[i] = num > 0.0 ? 1 : -1;
    }
    return signs;
}

namespace {

template <typename Score>
PsMax argmax_tier(NetworkModel const& model, Score score)
{
    PsMax best;
    double best_score = -1.0;
    bool found = false;
    for (std::size_t k = 0; k < model.size(); ++k) {
        if (model.tier(k).lambda_max <= 0.0) continue;
        double const s = score(k);
        if (!found || s > best_score) {
            best.tier = k;
            best.tied = false;
            best_score = s;
            found = true;
        } else if (s == best_score) {
            best.tied = true;
        }
    }
    return best;
}

NetworkModel single_tier(NetworkModel const& model, std::size_t k)
{
    std::vector<double> lambda(model.size(), 0.0);
    lambda[k] = model.tier(k).lambda_max;
    return model.with_densities(lambda);
}

}  // namespace

PsMax ps_max(NetworkModel const& model, double gamma_hat, PsMode mode)
{
    if (mode == PsMode::Asymptotic) {
        auto const ratio = reliability_ratios(model);
        auto best = argmax_tier(model, [&](std::size_t k) { return ratio[k]; });
        best.value = asymptotic_scale(model, gamma_hat) * ratio[best.tier];
        return best;
    }
    if (!model.is_unbiased_usdma()) {
        throw DomainError(
            "exact p_s maximum is only established for unbiased U-SDMA networks; "
            "use asymptotic mode");
    }
    auto best = argmax_tier(
        model, [&](std::size_t k) { return static_cast<double>(model.tier(k).antennas); });
    best.value = ps_exact_tier(single_tier(model, best.tier), best.tier, gamma_hat);
    return best;
}

}  // namespace hetnet
