// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#include "hetnet/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hetnet/error.hpp"
#include "hetnet/parallel.hpp"
#include "hetnet/rng.hpp"

namespace hetnet {

namespace {

constexpr std::uint64_t kServingStream = 0xFFFF'FFFFULL;
constexpr int kMaxRedraws = 1000;
constexpr long kBlock = 512;

/// Gamma(shape, 1) for integer shape as -log of a product of uniforms,
/// chunked so the product cannot underflow.
double gamma_integer(StreamRng& rng, int shape)
{
    double total = 0.0;
    while (shape > 0) {
        int const chunk = std::min(shape, 16);
        double prod = 1.0;
        for (int i = 0; i < chunk; ++i) prod *= rng.uniform_open();
        total -= std::log(prod);
        shape -= chunk;
    }
    return total;
}

/// Path loss r^-alpha from r^2, avoiding pow() for even integer alpha.
struct PathLoss {
    double half_alpha;
    int integer_power;

    explicit PathLoss(double alpha) : half_alpha(alpha / 2.0), integer_power(0)
    {
        double const rounded = std::round(half_alpha);
        if (rounded == half_alpha && rounded <= 8.0) integer_power = static_cast<int>(rounded);
    }

    double operator()(double r2) const
    {
        if (integer_power > 0) {
            double v = r2;
            for (int i = 1; i < integer_power; ++i) v *= r2;
            return 1.0 / v;
        }
        return std::pow(r2, -half_alpha);
    }
};

}  // namespace

RegionChoice choose_region(NetworkModel const& model, double requested_radius_m)
{
    double total = 0.0;
    double densest = 0.0;
    for (auto const& t : model.tiers()) {
        total += t.lambda;
        densest = std::max(densest, t.lambda);
    }
    RegionChoice rc;
    if (requested_radius_m > 0.0) {
        rc.radius_m = requested_radius_m;
    } else {
        double const area_km2 = std::max(1e4 / total, 1e3 / densest);
        rc.radius_m = 1000.0 * std::sqrt(area_km2 / std::numbers::pi);
        rc.automatic = true;
    }
    double const area_km2 = std::numbers::pi * std::pow(rc.radius_m / 1000.0, 2);
    rc.expected_total = total * area_km2;
    rc.expected_densest = densest * area_km2;
    return rc;
}

TrialOutcome run_trial(NetworkModel const& model, std::span<double const> gamma_hat_grid,
                       double region_radius_m, std::uint64_t seed, std::uint64_t trial)
{
    if (!(region_radius_m > 0.0)) throw DomainError("run_trial: region radius must be positive");

    std::size_t const n = model.size();
    double const radius_km = region_radius_m / 1000.0;
    double const max_r2 = radius_km * radius_km;
    PathLoss const loss(model.alpha());

    TrialOutcome out;
    for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
        std::vector<StreamRng> streams;
        streams.reserve(n);
        // Squared distance of each tier's nearest BS; +inf when the tier has
        // no BS in the disc.
        std::vector<double> nearest_r2(n, std::numeric_limits<double>::infinity());
        std::vector<double> area_scale(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            streams.emplace_back(seed, std::initializer_list<std::uint64_t>{
                                           trial, static_cast<std::uint64_t>(attempt), j});
            double const lambda = model.tier(j).lambda;
            if (lambda <= 0.0) continue;
            // pi * lambda * r^2 of successive points are unit-rate Poisson arrivals.
            area_scale[j] = 1.0 / (std::numbers::pi * lambda);
            double const r2 = -std::log(streams[j].uniform_open()) * area_scale[j];
            if (r2 <= max_r2) nearest_r2[j] = r2;
        }

        std::size_t serving = n;
        double best_power = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(nearest_r2[j])) continue;
            auto const& t = model.tier(j);
            double const p = t.power * t.bias * loss(nearest_r2[j]);
            if (serving == n || p > best_power) {
                serving = j;
                best_power = p;
            }
        }
        if (serving == n) {
            ++out.redraws;
            continue;
        }

        double interference = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(nearest_r2[j])) continue;
            auto const& t = model.tier(j);
            double const per_user = t.power / t.users;
            auto& rng = streams[j];
            double r2 = nearest_r2[j];
            double tier_sum = 0.0;
            // The stream alternates (gain, next spacing) so the realized points
            // do not depend on which tier ends up serving.
            for (bool first = true; r2 <= max_r2; first = false) {
                double const gain = gamma_integer(rng, t.users);
                if (!(first && j == serving)) tier_sum += gain * loss(r2);
                r2 += -std::log(rng.uniform_open()) * area_scale[j];
            }
            interference += per_user * tier_sum;
        }

        auto const& st = model.tier(serving);
        StreamRng serving_rng(seed, {trial, static_cast<std::uint64_t>(attempt), kServingStream});
        double const signal =
            st.power / st.users * gamma_integer(serving_rng, st.diversity()) * loss(nearest_r2[serving]);

        out.serving_tier = serving;
        out.serving_distance_m = 1000.0 * std::sqrt(nearest_r2[serving]);
        out.sir = interference > 0.0 ? signal / interference
                                     : std::numeric_limits<double>::infinity();
        out.success.resize(gamma_hat_grid.size());
        for (std::size_t g = 0; g < gamma_hat_grid.size(); ++g) {
            out.success[g] = out.sir >= gamma_hat_grid[g];
        }
        return out;
    }
    throw ConvergenceError("run_trial: every tier empty after repeated redraws; enlarge the region");
}

SimulationReport simulate_ps(NetworkModel const& model, SimConfig const& config)
{
    if (config.trials < 1) throw ValidationError("simulation needs at least one trial");
    if (config.gamma_hat_grid.empty()) throw ValidationError("simulation needs a threshold grid");
    for (double g : config.gamma_hat_grid) {
        if (!(g >= 0.0) || !std::isfinite(g)) {
            throw ValidationError("SIR thresholds must be finite and nonnegative");
        }
    }
    if (config.region_radius_m < 0.0) throw ValidationError("region radius must be >= 0");

    std::size_t const n = model.size();
    std::size_t const grid = config.gamma_hat_grid.size();
    auto const region = choose_region(model, config.region_radius_m);

    struct Counts {
        std::vector<long> success;
        std::vector<long> assoc;
        std::vector<long> tier_success;  // [tier * grid + g]
        long redraws = 0;
    };
    long const blocks = (config.trials + kBlock - 1) / kBlock;
    std::vector<Counts> partial(static_cast<std::size_t>(blocks));

    parallel_for(partial.size(), [&](std::size_t b) {
        Counts c;
        c.success.assign(grid, 0);
        c.assoc.assign(n, 0);
        c.tier_success.assign(n * grid, 0);
        long const begin = static_cast<long>(b) * kBlock;
        long const end = std::min(config.trials, begin + kBlock);
        for (long trial = begin; trial < end; ++trial) {
            auto const o = run_trial(model, config.gamma_hat_grid, region.radius_m, config.seed,
                                     static_cast<std::uint64_t>(trial));
            c.redraws += o.redraws;
            ++c.assoc[o.serving_tier];
            for (std::size_t g = 0; g < grid; ++g) {
                if (!o.success[g]) continue;
                ++c.success[g];
                ++c.tier_success[o.serving_tier * grid + g];
            }
        }
        partial[b] = std::move(c);
    });

    Counts total;
    total.success.assign(grid, 0);
    total.assoc.assign(n, 0);
    total.tier_success.assign(n * grid, 0);
    for (auto const& c : partial) {
        for (std::size_t g = 0; g < grid; ++g) total.success[g] += c.success[g];
        for (std::size_t k = 0; k < n; ++k) total.assoc[k] += c.assoc[k];
        for (std::size_t i = 0; i < n * grid; ++i) total.tier_success[i] += c.tier_success[i];
        total.redraws += c.redraws;
    }

    SimulationReport r;
    r.gamma_hat = config.gamma_hat_grid;
    r.trials_used = config.trials;
    r.redraws = total.redraws;
    r.seed = config.seed;
    r.region = region;
    double const trials = static_cast<double>(config.trials);
    for (std::size_t g = 0; g < grid; ++g) {
        double const p = total.success[g] / trials;
        r.ps_hat.push_back(p);
        r.std_error.push_back(std::sqrt(p * (1.0 - p) / trials));
    }
    r.association_count = total.assoc;
    r.tier_success.assign(n, std::vector<double>(grid, std::numeric_limits<double>::quiet_NaN()));
    for (std::size_t k = 0; k < n; ++k) {
        r.association_freq.push_back(total.assoc[k] / trials);
        if (total.assoc[k] == 0) continue;
        for (std::size_t g = 0; g < grid; ++g) {
            r.tier_success[k][g] =
                static_cast<double>(total.tier_success[k * grid + g]) / total.assoc[k];
        }
    }
    return r;
}

}  // namespace hetnet
