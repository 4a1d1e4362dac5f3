// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hetnet/coverage.hpp"
#include "hetnet/error.hpp"
#include "oracles.hpp"

using namespace hetnet;
using oracle::db;

namespace {

// Single-tier Rayleigh, alpha = 4, no noise.
double siso_alpha4(double T)
{
    double const s = std::sqrt(T);
    return 1.0 / (1.0 + s * (std::numbers::pi / 2.0 - std::atan(1.0 / s)));
}

hetnet::NetworkModel random_model(std::mt19937_64& gen, int max_diversity)
{
    std::uniform_int_distribution<int> tiers(1, 4);
    std::uniform_real_distribution<double> alpha(2.5, 5.0);
    std::uniform_real_distribution<double> logu(-2.0, 1.0);
    std::uniform_real_distribution<double> logl(0.0, 3.0);
    int const K = tiers(gen);
    std::vector<double> lam, P, B;
    std::vector<int> M, U;
    for (int k = 0; k < K; ++k) {
        int const u = std::uniform_int_distribution<int>(1, 4)(gen);
        int const d = std::uniform_int_distribution<int>(1, max_diversity)(gen);
        U.push_back(u);
        M.push_back(u + d - 1);
        lam.push_back(std::pow(10.0, logl(gen)));
        P.push_back(std::pow(10.0, logu(gen)));
        B.push_back(std::pow(10.0, 0.5 * logu(gen)));
    }
    return oracle::make(alpha(gen), lam, P, B, M, U);
}

}  // namespace

TEST_CASE("SISO single tier matches the alpha = 4 closed form")
{
    auto const m = oracle::make(4, {100}, {1}, {1}, {1}, {1});
    CHECK(ps_exact(m, 1.0) == doctest::Approx(1.0 / (1.0 + std::numbers::pi / 4.0)).epsilon(1e-12));
    for (double g_db : {-10.0, -3.0, 0.0, 7.0, 20.0}) {
        CHECK(ps_exact(m, db(g_db)) == doctest::Approx(siso_alpha4(db(g_db))).epsilon(1e-11));
    }
}

TEST_CASE("multi-tier SISO with no bias reduces to the single-tier value")
{
    auto const m = oracle::make(4, {100, 500, 1000}, {6.3, 0.13, 0.05}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1});
    for (double g_db : {-5.0, 0.0, 10.0}) {
        for (double v : ps_exact_tiers(m, db(g_db))) {
            CHECK(v == doctest::Approx(siso_alpha4(db(g_db))).epsilon(1e-11));
        }
    }
}

TEST_CASE("q coefficients against quadrature of the defining integrals")
{
    auto const m = oracle::load("fig2.json");
    double const g = db(5.0);
    // Frozen quadrature values, fig2 tier 1 at 5 dB.
    double const frozen[] = {1947.2489798696915, -942.87527176558126, -222.40217866589487,
                             -103.50701880299322, -59.675167805324371};
    auto const q = q_coefficients(m, 0, g, 5);
    CHECK(q.tier_index == 0);
    CHECK(q.kind == SeriesKind::QSeries);
    for (int i = 0; i < 5; ++i) CHECK(q.values[i] == doctest::Approx(frozen[i]).epsilon(1e-9));

    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto const r = random_model(gen, 4);
        std::size_t const k = trial % r.size();
        double const gh = db(std::uniform_real_distribution<double>(-10, 15)(gen));
        auto const lib = q_coefficients(r, k, gh, 4).values;
        auto const quad = oracle::q_by_quadrature(r, k, gh, 4);
        for (int i = 0; i < 4; ++i) CHECK(lib[i] == doctest::Approx(quad[i]).epsilon(1e-8));
    }
}

TEST_CASE("q sign pattern and reciprocal series")
{
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto const m = random_model(gen, 8);
        double const g = db(std::uniform_real_distribution<double>(-15, 25)(gen));
        for (std::size_t k = 0; k < m.size(); ++k) {
            auto const q = q_coefficients(m, k, g, 8);
            CHECK(q.values[0] > 0.0);
            for (int i = 1; i < 8; ++i) CHECK(q.values[i] <= 0.0);
            auto const t = reciprocal_series(q, 8);
            CHECK(t.kind == SeriesKind::Reciprocal);
            for (double v : t.values) CHECK(v >= 0.0);
            // q * t = 1 as power series.
            for (int n = 0; n < 8; ++n) {
                double s = 0.0, scale = 0.0;
                for (int i = 0; i <= n; ++i) {
                    s += q.values[i] * t.values[n - i];
                    scale += std::abs(q.values[i] * t.values[n - i]);
                }
                CHECK(std::abs(s - (n == 0 ? 1.0 : 0.0)) <= 1e-12 * std::max(1.0, scale));
            }
        }
    }
}

TEST_CASE("reciprocal series equals the dense Toeplitz inverse")
{
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 40; ++trial) {
        auto const m = random_model(gen, 10);
        double const g = db(std::uniform_real_distribution<double>(-10, 20)(gen));
        auto const ps = ps_exact_tiers(m, g);
        for (std::size_t k = 0; k < m.size(); ++k) {
            int const D = m.tier(k).diversity();
            auto const q = q_coefficients(m, k, g, D);
            double const dense = std::min(1.0, m.normalizer() * oracle::toeplitz_inverse_l1(q.values, D));
            CHECK(ps[k] == doctest::Approx(dense).epsilon(1e-10));
        }
    }
}

TEST_CASE("fig2 exact success probability, frozen values")
{
    auto const m = oracle::load("fig2.json");
    CHECK(ps_exact(m, db(0)) == doctest::Approx(0.6097883615607674).epsilon(1e-10));
    CHECK(ps_exact(m, db(5)) == doctest::Approx(0.3856735541252641).epsilon(1e-10));
    CHECK(ps_exact(m, db(10)) == doctest::Approx(0.22358121537864342).epsilon(1e-10));
    CHECK(ps_exact(m, db(20)) == doctest::Approx(0.07122762787335075).epsilon(1e-10));

    // p_s = sum_k A_k p_s(k)
    auto const a = association_probabilities(m);
    auto const t = ps_exact_tiers(m, db(3));
    double s = 0.0;
    for (std::size_t k = 0; k < 3; ++k) s += a[k] * t[k];
    CHECK(ps_exact(m, db(3)) == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("exact success probability lies in [0,1] and decreases in the threshold")
{
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto const m = random_model(gen, 6);
        double prev = 1.0;
        for (double g_db = -20.0; g_db <= 30.0; g_db += 2.5) {
            double const p = ps_exact(m, db(g_db));
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            CHECK(p <= prev + 1e-13);
            prev = p;
        }
    }
}

TEST_CASE("density invariance")
{
    // Single tier: any density.
    double const ref = ps_exact(oracle::make(4, {10}, {1}, {1}, {4}, {2}), db(3));
    for (double lam : {100.0, 1000.0}) {
        CHECK(ps_exact(oracle::make(4, {lam}, {1}, {1}, {4}, {2}), db(3)) ==
              doctest::Approx(ref).epsilon(1e-10));
    }
    // Common scaling of every density.
    auto const m = oracle::load("fig2.json");
    auto const lam = m.densities();
    for (double c : {0.01, 3.7, 1000.0}) {
        std::vector<double> scaled;
        for (double l : lam) scaled.push_back(c * l);
        auto const n = oracle::make(4, scaled, {6.3, 0.13, 0.05}, {0.25, 0.5, 1}, {8, 4, 1}, {4, 2, 1});
        CHECK(ps_exact(n, db(5)) == doctest::Approx(ps_exact(m, db(5))).epsilon(1e-10));
    }
}

TEST_CASE("unbiased U-SDMA per-tier success ignores densities and powers")
{
    auto const base = oracle::make(4, {100, 200, 500}, {6.3, 0.13, 0.05}, {1, 1, 1}, {4, 2, 2}, {2, 2, 2});
    auto const ref = ps_exact_tiers(base, 1.0);
    CHECK(ref[0] == doctest::Approx(0.7149954557937166).epsilon(1e-10));
    CHECK(ref[1] == doctest::Approx(0.4118451194735373).epsilon(1e-10));
    CHECK(ref[2] == doctest::Approx(ref[1]).epsilon(1e-12));
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.01, 10.0);
    for (int trial = 0; trial < 20; ++trial) {
        auto const m = oracle::make(4, {100 * u(gen), 100 * u(gen), 100 * u(gen)}, {u(gen), u(gen), u(gen)},
                                    {1, 1, 1}, {4, 2, 2}, {2, 2, 2});
        auto const v = ps_exact_tiers(m, 1.0);
        for (int k = 0; k < 3; ++k) CHECK(v[k] == doctest::Approx(ref[k]).epsilon(1e-10));
    }
    // More antennas, more success.
    auto const more = oracle::make(4, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {6, 4, 2}, {2, 2, 2});
    auto const w = ps_exact_tiers(more, db(5));
    CHECK(w[0] > w[1]);
    CHECK(w[1] > w[2]);
}

TEST_CASE("inactive tiers")
{
    auto const m = oracle::make(4, {0, 500, 1000}, {6.3, 0.13, 0.05}, {0.25, 0.5, 1}, {8, 4, 1}, {4, 2, 1},
                                {100, 500, 1000});
    CHECK_THROWS_WITH_AS(ps_exact_tier(m, 0, 1.0), doctest::Contains("tier inactive"), DomainError);
    auto const v = ps_exact_tiers(m, 1.0);
    CHECK(std::isnan(v[0]));
    CHECK(std::isfinite(ps_exact(m, 1.0)));
    CHECK_THROWS_AS(ps_exact(m, 0.0), DomainError);
    CHECK_THROWS_AS(ps_exact(m, -1.0), DomainError);
}

TEST_CASE("asymptotic forms")
{
    auto const m = oracle::load("fig2.json");
    for (double g : {0.5, 2.0, 30.0}) {
        CHECK(ps_asymptotic(m, 2 * g) == doctest::Approx(std::pow(2.0, -m.delta()) * ps_asymptotic(m, g)).epsilon(1e-14));
        CHECK(asymptotic_scale(m, g) == doctest::Approx(std::pow(g, -0.5) * 2.0 / std::numbers::pi).epsilon(1e-14));
    }
    // Overall = s (c.lambda)/(d.lambda).
    auto const v = coefficient_vectors(m);
    double cl = 0.0, dl = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        cl += v.c[i] * m.tier(i).lambda;
        dl += v.d[i] * m.tier(i).lambda;
    }
    CHECK(ps_asymptotic(m, db(7)) == doctest::Approx(asymptotic_scale(m, db(7)) * cl / dl).epsilon(1e-13));

    double prev_gap = 1.0;
    for (double g_db = 5.0; g_db <= 20.0; g_db += 1.0) {
        double const gap = std::abs(ps_asymptotic(m, db(g_db)) - ps_exact(m, db(g_db)));
        CHECK(gap < 0.02);
        if (g_db >= 10.0) CHECK(gap < 0.01);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}

TEST_CASE("small thresholds and the SISO q_0")
{
    auto const siso = oracle::make(4, {100}, {4}, {1}, {1}, {1});
    auto const q = q_coefficients(siso, 0, 1.0, 1);
    CHECK(q.values[0] / (100.0 * 2.0) == doctest::Approx(1.0 + std::numbers::pi / 4.0).epsilon(1e-12));
    auto const m = oracle::load("fig2.json");
    for (double v : ps_exact_tiers(m, 1e-9)) CHECK(v == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("overall asymptotic value is the association-weighted tier sum")
{
    auto const m = oracle::load("fig5.json");
    auto const a = association_probabilities(m);
    for (double g : {db(0), db(12)}) {
        auto const t = ps_asymptotic_tiers(m, g);
        double s = 0.0;
        for (std::size_t k = 0; k < m.size(); ++k) s += a[k] * t[k];
        CHECK(ps_asymptotic(m, g) == doctest::Approx(s).epsilon(1e-12));
    }
    auto const siso = oracle::make(4, {3}, {1}, {1}, {1}, {1});
    CHECK(ps_asymptotic(siso, 4.0) == doctest::Approx(0.5 * 2.0 / std::numbers::pi).epsilon(1e-14));
}
