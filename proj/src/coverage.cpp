// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#include "hetnet/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "hetnet/error.hpp"
#include "hetnet/specfun.hpp"

namespace hetnet {

namespace {

void check_threshold(double gamma_hat)
{
    if (!(gamma_hat > 0.0) || !std::isfinite(gamma_hat)) {
        throw DomainError("SIR threshold must be positive and finite");
    }
}

void check_tier_index(NetworkModel const& model, std::size_t k)
{
    if (k >= model.size()) throw DomainError("tier index out of range");
}

}  // namespace

SeriesCoefficients q_coefficients(NetworkModel const& model, std::size_t k,
                                  double gamma_hat, int n)
{
    check_tier_index(model, k);
    check_threshold(gamma_hat);
    if (n < 1) throw DomainError("q_coefficients: need n >= 1");

    double const delta = model.delta();
    auto const& serving = model.tier(k);
    double const serving_load = serving.users * serving.bias;

    SeriesCoefficients q;
    q.tier_index = k;
    q.gamma_hat = gamma_hat;
    q.kind = SeriesKind::QSeries;
    q.values.assign(static_cast<std::size_t>(n), 0.0);

    for (std::size_t j = 0; j < model.size(); ++j) {
        auto const& t = model.tier(j);
        if (t.lambda == 0.0) continue;
        double const weight = t.lambda * std::pow(t.power * t.bias, delta);
        double const x = serving_load * gamma_hat / (t.users * t.bias);
        double const log_x = std::log(x);
        for (int i = 0; i < n; ++i) {
            double hyp = 0.0;
            try {
                hyp = specfun::gauss_2f1_neg({i - delta, static_cast<double>(t.users + i),
                                              i + 1.0 - delta, x});
            } catch (ConvergenceError const& e) {
                std::ostringstream os;
                os << e.what() << " [q_" << i << ", interfering tier " << j + 1 << "]";
                throw ConvergenceError(os.str());
            }
            double const magnitude =
                std::exp(i * log_x + std::log(specfun::rising_binomial(t.users, i))
                         + std::log(hyp));
            q.values[static_cast<std::size_t>(i)] += weight * delta / (delta - i) * magnitude;
        }
    }

    if (!(q.values[0] > 0.0)) throw Error("q_coefficients: q_0 not positive");
    for (int i = 1; i < n; ++i) {
        // Zero only through underflow at vanishing thresholds.
        if (!(q.values[static_cast<std::size_t>(i)] <= 0.0)) {
            std::ostringstream os;
            os << "q_coefficients: q_" << i << " is positive";
            throw Error(os.str());
        }
    }
    return q;
}

SeriesCoefficients reciprocal_series(SeriesCoefficients const& q, int length)
{
    if (length < 1 || static_cast<std::size_t>(length) > q.values.size()) {
        throw DomainError("reciprocal_series: length must be in [1, q length]");
    }
    double const q0 = q.values[0];
    if (q0 == 0.0) throw DomainError("reciprocal_series: q_0 is zero");

    SeriesCoefficients t;
    t.tier_index = q.tier_index;
    t.gamma_hat = q.gamma_hat;
    t.kind = SeriesKind::Reciprocal;
    t.values.resize(static_cast<std::size_t>(length));
    t.values[0] = 1.0 / q0;
    for (std::size_t n = 1; n < t.values.size(); ++n) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += q.values[n - i] * t.values[i];
        t.values[n] = -acc / q0;
    }
    return t;
}

double ps_exact_tier(NetworkModel const& model, std::size_t k, double gamma_hat)
{
    check_tier_index(model, k);
    if (model.tier(k).lambda == 0.0) {
        throw DomainError("tier inactive: conditional success probability undefined");
    }
    int const dof = model.tier(k).diversity();
    auto const t = reciprocal_series(q_coefficients(model, k, gamma_hat, dof), dof);
    for (std::size_t n = 0; n < t.values.size(); ++n) {
        // The max-column-sum norm reduces to the first column only when it
        // is nonnegative.
        if (t.values[n] < 0.0) {
            std::ostringstream os;
            os << "reciprocal coefficient t_" << n << " is negative (" << t.values[n]
               << "); Toeplitz inverse norm no longer equals the first-column sum";
            throw Error(os.str());
        }
    }
    double const sum = std::accumulate(t.values.begin(), t.values.end(), 0.0);
    return std::clamp(model.normalizer() * sum, 0.0, 1.0);
}

std::vector<double> ps_exact_tiers(NetworkModel const& model, double gamma_hat)
{
    std::vector<double> out(model.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t k = 0; k < model.size(); ++k) {
        if (model.tier(k).lambda > 0.0) out[k] = ps_exact_tier(model, k, gamma_hat);
    }
    return out;
}

double ps_exact(NetworkModel const& model, double gamma_hat)
{
    auto const weights = association_probabilities(model);
    double p = 0.0;
    for (std::size_t k = 0; k < model.size(); ++k) {
        if (weights[k] > 0.0) p += weights[k] * ps_exact_tier(model, k, gamma_hat);
    }
    return std::clamp(p, 0.0, 1.0);
}

double asymptotic_scale(NetworkModel const& model, double gamma_hat)
{
    check_threshold(gamma_hat);
    return std::pow(gamma_hat, -model.delta()) * specfun::sinc_norm(model.delta());
}

double ps_asymptotic_tier(NetworkModel const& model, std::size_t k, double gamma_hat)
{
    check_tier_index(model, k);
    double const delta = model.delta();
    auto const coef = coefficient_vectors(model);
    double interference = 0.0;
    for (std::size_t j = 0; j < model.size(); ++j) {
        interference += model.tier(j).lambda * coef.d[j];
    }
    auto const& t = model.tier(k);
    double const link = std::pow(t.users * t.bias, -delta)
                        * specfun::gamma_ratio(t.diversity(), delta);
    return model.normalizer() * asymptotic_scale(model, gamma_hat) * link / interference;
}

std::vector<double> ps_asymptotic_tiers(NetworkModel const& model, double gamma_hat)
{
    std::vector<double> out;
    out.reserve(model.size());
    for (std::size_t k = 0; k < model.size(); ++k) {
        out.push_back(ps_asymptotic_tier(model, k, gamma_hat));
    }
    return out;
}

double ps_asymptotic(NetworkModel const& model, double gamma_hat)
{
    auto const coef = coefficient_vectors(model);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < model.size(); ++k) {
        num += coef.c[k] * model.tier(k).lambda;
        den += coef.d[k] * model.tier(k).lambda;
    }
    return asymptotic_scale(model, gamma_hat) * num / den;
}

}  // namespace hetnet
