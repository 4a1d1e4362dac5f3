// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#include "hetnet/specfun.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hetnet/error.hpp"

namespace hetnet::specfun {

double log_gamma(double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream os;
        os << "log_gamma: argument must be positive and finite, got " << x;
        throw DomainError(os.str());
    }
    return std::lgamma(x);
}

double gamma_ratio(double a, double d)
{
    if (!(a > 0.0) || !(d > 0.0 && d < 1.0)) {
        std::ostringstream os;
        os << "gamma_ratio: need a > 0 and 0 < d < 1, got a=" << a << " d=" << d;
        throw DomainError(os.str());
    }
    return std::exp(log_gamma(a + d) - log_gamma(a));
}

double pochhammer(double a, int n)
{
    if (!(a > 0.0) || n < 0) {
        throw DomainError("pochhammer: need a > 0 and n >= 0");
    }
    if (n <= 64) {
        double r = 1.0;
        for (int m = 0; m < n; ++m) r *= a + m;
        return r;
    }
    return std::exp(log_gamma(a + n) - log_gamma(a));
}

double rising_binomial(double u, int i)
{
    if (!(u > 0.0) || i < 0) {
        throw DomainError("rising_binomial: need u > 0 and i >= 0");
    }
    if (i <= 64) {
        double r = 1.0;
        for (int m = 0; m < i; ++m) r *= (u + m) / (m + 1);
        return r;
    }
    return std::exp(log_gamma(u + i) - log_gamma(u) - log_gamma(i + 1.0));
}

double sinc_norm(double d)
{
    if (!(d > 0.0 && d < 1.0)) {
        throw DomainError("sinc_norm: argument must lie in (0, 1)");
    }
    double const x = std::numbers::pi * d;
    return std::sin(x) / x;
}

double gauss_2f1_neg(Hyp2F1Params const& p)
{
    if (!(p.c > 0.0)) {
        throw DomainError("gauss_2f1_neg: c must be positive");
    }
    if (!(p.x >= 0.0) || !std::isfinite(p.x)) {
        throw DomainError("gauss_2f1_neg: x must be finite and nonnegative");
    }
    if (p.x == 0.0) return 1.0;

    double const w = p.x / (1.0 + p.x);
    double const a = p.c - p.a;

    // Terms of 2F1(c - a, b; c; w); three consecutive negligible terms end
    // the sum so a single accidental near-zero term cannot stop it.
    double term = 1.0;
    double sum = 1.0;
    int small_run = 0;
    long n = 0;
    for (; n < kSeriesTermCap; ++n) {
        term *= (a + n) * (p.b + n) / ((p.c + n) * (n + 1.0)) * w;
        sum += term;
        if (std::abs(term) <= kSeriesRelTol * std::abs(sum)) {
            if (++small_run == 3) break;
        } else {
            small_run = 0;
        }
    }
    if (n == kSeriesTermCap) {
        std::ostringstream os;
        os.precision(17);
        os << "gauss_2f1_neg: series did not converge within " << kSeriesTermCap
           << " terms (transformed argument " << w << ")";
        throw ConvergenceError(os.str());
    }

    double const log_prefactor = -p.b * std::log1p(p.x);
    if (sum > 0.0) return std::exp(std::log(sum) + log_prefactor);
    return sum * std::exp(log_prefactor);
}

}  // namespace hetnet::specfun
