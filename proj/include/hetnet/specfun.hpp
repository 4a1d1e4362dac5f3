// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace hetnet::specfun {

/// Parameters of 2F1(a, b; c; -x), i.e. the Gauss hypergeometric function
/// at a nonpositive argument. Requires c > 0 and x >= 0.
struct Hyp2F1Params {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    double x = 0.0;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(a + d) / Gamma(a), evaluated in log space. Requires a > 0, 0 < d < 1.
double gamma_ratio(double a, double d);

/// Rising factorial (a)_n = Gamma(a + n) / Gamma(a) for a > 0.
double pochhammer(double a, int n);

/// Generalized binomial Gamma(u + i) / (Gamma(u) Gamma(i + 1)).
double rising_binomial(double u, int i);

/// sin(pi d) / (pi d) for 0 < d < 1.
double sinc_norm(double d);

/// 2F1(a, b; c; -x) through the Pfaff transformation
///   2F1(a, b; c; -x) = (1 + x)^(-b) 2F1(c - a, b; c; x / (1 + x)),
/// whose series argument stays in [0, 1) for every x >= 0.
///
/// Throws ConvergenceError when the transformed series does not settle
/// within the term cap, DomainError on invalid c or negative x.
double gauss_2f1_neg(Hyp2F1Params const& p);

inline constexpr long kSeriesTermCap = 1'000'000;
inline constexpr double kSeriesRelTol = 1e-12;

}  // namespace hetnet::specfun
