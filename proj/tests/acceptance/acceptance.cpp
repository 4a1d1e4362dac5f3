// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance checks. One PASS/FAIL line per criterion; exit
// status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hetnet/coverage.hpp"
#include "hetnet/metrics.hpp"
#include "hetnet/montecarlo.hpp"
#include "hetnet/optimize.hpp"
#include "oracles.hpp"

using namespace hetnet;
using oracle::db;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, std::string const& what)
    {
        if (!ok) {
            if (pass) detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

int g_failures = 0;

void criterion(int id, char const* title, double budget_s, std::function<void(Verdict&)> const& body)
{
    Verdict v;
    auto const t0 = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (std::exception const& e) {
        v.pass = false;
        v.detail << "exception: " << e.what() << "; ";
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
        v.pass = false;
        v.detail << "runtime " << secs << " s over budget " << budget_s << " s; ";
    }
    if (!v.pass) ++g_failures;
    std::printf("[criterion %2d] %s: %s (%.2f s) %s\n", id, v.pass ? "PASS" : "FAIL", title, secs,
                v.detail.str().c_str());
    std::fflush(stdout);
}

NetworkModel random_model(std::mt19937_64& gen)
{
    std::uniform_int_distribution<int> tiers(1, 4);
    std::uniform_real_distribution<double> alpha(2.5, 5.0);
    std::uniform_real_distribution<double> lg(-2.0, 1.0);
    std::uniform_real_distribution<double> ll(0.0, 3.0);
    int const K = tiers(gen);
    std::vector<double> lam, P, B;
    std::vector<int> M, U;
    for (int k = 0; k < K; ++k) {
        int const u = std::uniform_int_distribution<int>(1, 6)(gen);
        int const d = std::uniform_int_distribution<int>(1, 10)(gen);
        U.push_back(u);
        M.push_back(u + d - 1);
        lam.push_back(std::pow(10.0, ll(gen)));
        P.push_back(std::pow(10.0, lg(gen)));
        B.push_back(std::pow(10.0, 0.5 * lg(gen)));
    }
    return oracle::make(alpha(gen), lam, P, B, M, U);
}

}  // namespace

int main()
{
    criterion(1, "SISO baseline p_s = 0.560 +- 0.005", 1.0, [](Verdict& v) {
        auto const m = oracle::load("siso.json");
        double const p = ps_exact(m, 1.0);
        v.detail << "ps_exact " << p << ", closed form " << 1.0 / (1.0 + std::numbers::pi / 4) << "; ";
        v.require(std::abs(p - 0.560) <= 0.005, "value outside 0.560 +- 0.005");
        v.require(std::abs(p - 1.0 / (1.0 + std::numbers::pi / 4)) < 1e-10, "closed form mismatch");
    });

    criterion(2, "fig2 sweep: exact vs Monte Carlo and asymptotic gap", 300.0, [](Verdict& v) {
        auto const m = oracle::load("fig2.json");
        std::vector<double> gdb, grid;
        for (int i = -10; i <= 20; ++i) {
            gdb.push_back(i);
            grid.push_back(db(i));
        }
        SimConfig cfg{.trials = 100000, .seed = 42, .region_radius_m = 0.0, .gamma_hat_grid = grid};
        auto const sim = simulate_ps(m, cfg);
        double worst_mc = 0.0, worst5 = 0.0, worst10 = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            double const exact = ps_exact(m, grid[i]);
            double const delta = std::abs(exact - sim.ps_hat[i]);
            double const tol = std::max(0.01, 3.0 * sim.std_error[i]);
            worst_mc = std::max(worst_mc, delta / tol);
            if (delta >= tol) v.require(false, "Monte Carlo mismatch at " + std::to_string(gdb[i]) + " dB");
            double const gap = std::abs(ps_asymptotic(m, grid[i]) - exact);
            if (gdb[i] >= 5) {
                worst5 = std::max(worst5, gap);
                v.require(gap < 0.02, "asymptotic gap >= 0.02 at " + std::to_string(gdb[i]) + " dB");
            }
            if (gdb[i] >= 10) {
                worst10 = std::max(worst10, gap);
                v.require(gap < 0.01, "asymptotic gap >= 0.01 at " + std::to_string(gdb[i]) + " dB");
            }
        }
        v.detail << "max |dMC|/tol " << worst_mc << ", max gap >=5 dB " << worst5 << ", >=10 dB "
                 << worst10 << "; ";
    });

    criterion(3, "density invariance (single tier, common scaling, U-SDMA)", 10.0, [](Verdict& v) {
        double const g = db(3);
        double const ref = ps_exact(oracle::make(4, {10}, {1}, {1}, {4}, {2}), g);
        for (double lam : {100.0, 1000.0}) {
            v.require(std::abs(ps_exact(oracle::make(4, {lam}, {1}, {1}, {4}, {2}), g) - ref) < 1e-10,
                      "single tier varies with density");
        }
        std::mt19937_64 gen(31);
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            auto const m = random_model(gen);
            double const c = std::pow(10.0, std::uniform_real_distribution<double>(-3, 3)(gen));
            std::vector<double> lam, P, B;
            std::vector<int> M, U;
            for (auto const& tier : m.tiers()) {
                lam.push_back(c * tier.lambda);
                P.push_back(tier.power);
                B.push_back(tier.bias);
                M.push_back(tier.antennas);
                U.push_back(tier.users);
            }
            auto const s = oracle::make(m.alpha(), lam, P, B, M, U);
            double const d = std::abs(ps_exact(s, g) - ps_exact(m, g));
            worst = std::max(worst, d);
            v.require(d < 1e-10, "common scaling changes p_s");
        }
        auto const base = oracle::load("fig3_usdma.json");
        auto const ref_tiers = ps_exact_tiers(base, 1.0);
        std::uniform_real_distribution<double> u(0.01, 100.0);
        for (int t = 0; t < 50; ++t) {
            auto const m = oracle::make(4, {u(gen), u(gen), u(gen)}, {u(gen), u(gen), u(gen)}, {1, 1, 1},
                                        {4, 2, 2}, {2, 2, 2});
            auto const pt = ps_exact_tiers(m, 1.0);
            for (int k = 0; k < 3; ++k) {
                worst = std::max(worst, std::abs(pt[k] - ref_tiers[k]));
                v.require(std::abs(pt[k] - ref_tiers[k]) < 1e-10, "U-SDMA per-tier p_s varies");
            }
        }
        v.detail << "max deviation " << worst << "; ";
    });

    criterion(4, "reciprocal series vs dense Toeplitz inverse, 200 models", 30.0, [](Verdict& v) {
        std::mt19937_64 gen(4);
        double worst = 0.0;
        int checked = 0;
        for (int t = 0; t < 200; ++t) {
            auto const m = random_model(gen);
            double const g = db(std::uniform_real_distribution<double>(-10, 20)(gen));
            auto const ps = ps_exact_tiers(m, g);
            for (std::size_t k = 0; k < m.size(); ++k) {
                int const D = m.tier(k).diversity();
                auto const q = q_coefficients(m, k, g, D);
                double const dense =
                    std::min(1.0, m.normalizer() * oracle::toeplitz_inverse_l1(q.values, D));
                double const err = std::abs(dense - ps[k]);
                worst = std::max(worst, err);
                ++checked;
                v.require(err < 1e-10, "Toeplitz mismatch");
            }
        }
        v.detail << checked << " tiers, max error " << worst << "; ";
    });

    criterion(5, "best single tier maximizes p_s", 30.0, [](Verdict& v) {
        auto const m = oracle::load("fig2.json");
        double const g = db(5);
        std::vector<double> only2{0.0, 500.0, 0.0};
        double const single = ps_asymptotic(m.with_densities(only2), g);
        v.require(ps_max(m, g, PsMode::Asymptotic).tier == 1, "asymptotic argmax is not tier 2");
        std::mt19937_64 gen(5);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double worst = -1.0;
        for (int i = 0; i < 10000; ++i) {
            std::vector<double> lam{100 * u(gen), 500 * u(gen), 1000 * u(gen)};
            double const p = ps_asymptotic(m.with_densities(lam), g);
            worst = std::max(worst, p - single);
            v.require(p <= single + 1e-12, "random mix beats tier 2");
        }
        auto const u3 = oracle::load("fig3_usdma.json");
        auto const best = ps_max(u3, 1.0, PsMode::Exact);
        v.require(best.tier == 0, "U-SDMA exact argmax is not tier 1");
        for (std::size_t k = 0; k < 3; ++k) {
            std::vector<double> lone(3, 0.0);
            lone[k] = u3.tier(k).lambda_max;
            v.require(ps_exact(u3.with_densities(lone), 1.0) <= best.value + 1e-12,
                      "a single tier beats the reported maximum");
        }
        v.detail << "max (mix - tier 2) " << worst << ", U-SDMA max " << best.value << " at tier "
                 << best.tier + 1 << "; ";
    });

    criterion(6, "U-SDMA greedy vs grid, tier-2 onset", 120.0, [](Verdict& v) {
        auto const m = oracle::load("fig3_usdma.json");
        int const res = 200;
        double const lg = std::log2(2.0);
        // A grid step in tier k moves ASE by at most lambda_max_k/res * U * p_s(k) * log2(1+g).
        double cell = 0.0;
        for (std::size_t k = 0; k < 3; ++k) {
            std::vector<double> lone(3, 0.0);
            lone[k] = m.tier(k).lambda_max;
            cell = std::max(cell, m.tier(k).lambda_max / res * m.tier(k).users *
                                      ps_exact_tier(m.with_densities(lone), k, 1.0) * lg);
        }
        int first_reduced = -1;
        double first_theta = -1.0;
        for (int i = 0; i <= 6; ++i) {
            double const theta = 0.40 + 0.05 * i;
            auto const alg = optimize_usdma(m, theta, 1.0);
            auto const grid = grid_search_oracle(m, theta, 1.0, res, PsMode::Exact);
            v.require(alg.feasible && grid.feasible, "infeasible point in the sweep");
            v.require(alg.ase >= grid.ase - cell, "greedy below grid minus one cell");
            for (std::size_t k = 0; k < 3 && first_reduced < 0; ++k) {
                if (alg.lambda[k] < m.tier(k).lambda_max) {
                    first_reduced = static_cast<int>(k);
                    first_theta = theta;
                    v.require(alg.trace.reduction_order.front() == 1, "tier 2 not first in reduction order");
                }
            }
        }
        v.require(first_reduced == 1, "tier 2 is not the first density to decrease");
        // Onset: bisection for the smallest theta that trims tier 2.
        double lo = 0.40, hi = 0.70;
        for (int it = 0; it < 60; ++it) {
            double const mid = 0.5 * (lo + hi);
            if (optimize_usdma(m, mid, 1.0).lambda[1] < m.tier(1).lambda_max) hi = mid;
            else lo = mid;
        }
        v.require(hi >= 0.56 && hi <= 0.60, "onset outside [0.56, 0.60]");
        v.detail << "first decrease at theta " << first_theta << " in tier " << first_reduced + 1
                 << ", onset " << hi << ", cell bound " << cell << "; ";
    });

    criterion(7, "general optimizer vs grid on fig5 at 5 dB", 300.0, [](Verdict& v) {
        auto const m = oracle::load("fig5.json");
        double const g = db(5);
        GeneralOptions opt;
        opt.restarts = 20;
        opt.epsilon = 1e-6;
        double worst = 1e9;
        for (int i = 0; i <= 15; ++i) {
            double const theta = 0.05 * i;
            auto const alg = optimize_general(m, theta, g, opt);
            auto const grid = grid_search_oracle(m, theta, g, 100);
            v.require(alg.feasible == grid.feasible, "feasibility disagrees with grid");
            if (!alg.feasible) continue;
            double const rel = alg.ase / grid.ase;
            worst = std::min(worst, rel);
            v.require(rel >= 0.99, "more than 1% below grid at theta " + std::to_string(theta));
            v.require(alg.ps >= theta - 1e-9, "requirement violated");
            if (i == 0) {
                for (std::size_t k = 0; k < 3; ++k)
                    v.require(std::abs(alg.lambda[k] - m.tier(k).lambda_max) <= 1e-9 * m.tier(k).lambda_max,
                              "theta = 0 solution is not lambda_max");
            }
            if (theta >= 0.55 - 1e-12) v.require(alg.lambda[0] == 0.0, "tier 1 active at theta >= 0.55");
        }
        v.detail << "min ASE ratio to grid " << worst << "; ";
    });

    criterion(8, "numerator gradient vs central differences", 1.0, [](Verdict& v) {
        auto const m = oracle::load("fig5.json");
        auto const c = coefficient_vectors(m);
        std::mt19937_64 gen(8);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            std::vector<double> lam{1 + 99 * u(gen), 1 + 499 * u(gen), 1 + 999 * u(gen)};
            auto const grad = scp_numerator_gradient(c.c1, c.c2, lam);
            auto const fd = oracle::finite_difference_gradient(
                [&](std::vector<double> const& x) { return scp_numerator(c.c1, c.c2, x); }, lam);
            for (std::size_t k = 0; k < 3; ++k) {
                double const rel = std::abs(grad[k] - fd[k]) / std::abs(grad[k]);
                worst = std::max(worst, rel);
                v.require(rel < 1e-6, "gradient mismatch");
            }
        }
        v.detail << "max relative error " << worst << "; ";
    });

    criterion(9, "LP solver vs vertex enumeration, 500 instances", 10.0, [](Verdict& v) {
        std::mt19937_64 gen(9);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::uniform_int_distribution<int> dim(1, 4);
        double worst = 0.0;
        for (int t = 0; t < 500; ++t) {
            int const K = dim(gen);
            std::vector<double> g(K), a(K), ub(K);
            for (int i = 0; i < K; ++i) {
                g[i] = u(gen);
                a[i] = u(gen);
                ub[i] = 1.0 + 1000.0 * std::abs(u(gen));
            }
            double const best = oracle::lp_vertex_optimum(g, a, ub);
            auto const x = solve_lp_box_halfspace(g, a, ub);
            double gx = 0.0, ax = 0.0, scale = 0.0;
            for (int i = 0; i < K; ++i) {
                v.require(x[i] >= 0.0 && x[i] <= ub[i], "box violated");
                gx += g[i] * x[i];
                ax += a[i] * x[i];
                scale += std::abs(a[i] * x[i]);
            }
            v.require(ax >= -1e-12 * std::max(1.0, scale), "halfspace violated");
            double const err = std::abs(gx - best) / std::max(1.0, std::abs(best));
            worst = std::max(worst, err);
            v.require(err <= 1e-12, "objective differs from vertex optimum");
        }
        v.detail << "max relative objective difference " << worst << "; ";
    });

    criterion(10, "simulator: serving-distance KS and association frequencies", 60.0, [](Verdict& v) {
        auto const m = oracle::load("fig2.json");
        std::vector<double> grid{1.0};
        double const radius = choose_region(m, 0.0).radius_m;
        long const trials = 20000;
        std::vector<std::vector<double>> dist(3);
        for (long t = 0; t < trials; ++t) {
            auto const o = run_trial(m, grid, radius, 2026, static_cast<std::uint64_t>(t));
            dist[o.serving_tier].push_back(o.serving_distance_m);
        }
        auto const a = association_probabilities(m);
        for (std::size_t k = 0; k < 3; ++k) {
            double const d = oracle::ks_statistic(
                dist[k], [&](double r) { return oracle::serving_distance_cdf(m, k, r); });
            double const p = oracle::ks_pvalue(d, dist[k].size());
            v.require(p > 0.01, "KS rejects tier " + std::to_string(k + 1));
            double const freq = static_cast<double>(dist[k].size()) / trials;
            double const z = (freq - a[k]) / std::sqrt(a[k] * (1 - a[k]) / trials);
            v.require(std::abs(z) < 3.0, "association frequency off by >= 3 sigma");
            v.detail << "tier " << k + 1 << ": KS p " << p << ", z " << z << "; ";
        }
    });

    std::printf("%d criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
