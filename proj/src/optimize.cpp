// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#include "hetnet/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "hetnet/coverage.hpp"
#include "hetnet/error.hpp"
#include "hetnet/parallel.hpp"
#include "hetnet/rng.hpp"

namespace hetnet {

namespace {

void check_theta(double theta)
{
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw DomainError("reliability requirement theta must lie in [0, 1]");
    }
}

double dot(std::span<double const> x, std::span<double const> y)
{
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double norm(std::span<double const> x)
{
    return std::sqrt(dot(x, x));
}

OptimizationResult infeasible_result()
{
    OptimizationResult r;
    r.feasible = false;
    r.converged = true;
    return r;
}

}  // namespace

Feasibility feasibility(NetworkModel const& model, double theta, double gamma_hat, PsMode mode)
{
    check_theta(theta);
    Feasibility f;
    f.ceiling = ps_max(model, gamma_hat, mode);
    // Success probability is strictly below 1 at any positive threshold, even
    // where the asymptotic form overshoots it.
    f.feasible = theta < 1.0 && theta <= f.ceiling.value;
    return f;
}

std::vector<double> solve_lp_box_halfspace(std::span<double const> g, std::span<double const> a,
                                           std::span<double const> lambda_max)
{
    std::size_t const n = g.size();
    if (a.size() != n || lambda_max.size() != n) {
        throw DomainError("solve_lp_box_halfspace: dimension mismatch");
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) x[i] = g[i] > 0.0 ? lambda_max[i] : 0.0;

    double deficit = -dot(a, x);
    if (deficit <= 0.0) return x;

    // A move shifts one coordinate away from its box-optimal bound in the
    // direction that raises a.x; cost is objective lost per unit of a.x gained.
    struct Move {
        std::size_t index;
        double cost;
        double capacity;
    };
    std::vector<Move> moves;
    for (std::size_t i = 0; i < n; ++i) {
        if (lambda_max[i] <= 0.0 || a[i] == 0.0) continue;
        bool const at_upper = x[i] > 0.0;
        if (at_upper && a[i] < 0.0) {
            moves.push_back({i, g[i] / -a[i], -a[i] * lambda_max[i]});
        } else if (!at_upper && a[i] > 0.0) {
            moves.push_back({i, -g[i] / a[i], a[i] * lambda_max[i]});
        }
    }
    std::stable_sort(moves.begin(), moves.end(),
                     [](Move const& l, Move const& r) { return l.cost < r.cost; });

    for (auto const& m : moves) {
        std::size_t const i = m.index;
        if (m.capacity < deficit) {
            x[i] = x[i] > 0.0 ? 0.0 : lambda_max[i];
            deficit -= m.capacity;
            continue;
        }
        double const shift = deficit / std::abs(a[i]);
        x[i] = x[i] > 0.0 ? lambda_max[i] - shift : shift;
        x[i] = std::clamp(x[i], 0.0, lambda_max[i]);
        deficit = 0.0;
        break;
    }
    return x;
}

double scp_numerator(std::span<double const> c1, std::span<double const> c2,
                     std::span<double const> lambda)
{
    return dot(c1, lambda) * dot(c2, lambda);
}

std::vector<double> scp_numerator_gradient(std::span<double const> c1,
                                           std::span<double const> c2,
                                           std::span<double const> lambda)
{
    double const s1 = dot(c1, lambda);
    double const s2 = dot(c2, lambda);
    std::vector<double> grad(c1.size());
    for (std::size_t i = 0; i < grad.size(); ++i) grad[i] = c1[i] * s2 + c2[i] * s1;
    return grad;
}

//---------------------------------------------------------------------------//
// Unbiased U-SDMA
//---------------------------------------------------------------------------//

OptimizationResult optimize_usdma(NetworkModel const& model, double theta, double gamma_hat)
{
    check_theta(theta);
    if (!model.is_unbiased_usdma()) {
        throw DomainError("optimize_usdma requires an unbiased U-SDMA network");
    }
    if (!feasibility(model, theta, gamma_hat, PsMode::Exact).feasible) {
        return infeasible_result();
    }

    std::size_t const n = model.size();
    double const delta = model.delta();
    int const users = model.tier(0).users;

    std::vector<double> ps_tier(n, 0.0);
    std::vector<double> weight(n, 0.0);
    std::vector<double> b(n, 0.0);
    std::vector<double> y(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        auto const& t = model.tier(k);
        weight[k] = std::pow(t.power / users, delta);
        if (t.lambda_max <= 0.0) continue;
        std::vector<double> lone(n, 0.0);
        lone[k] = t.lambda_max;
        ps_tier[k] = ps_exact_tier(model.with_densities(lone), k, gamma_hat);
        b[k] = weight[k] * (1.0 - theta / ps_tier[k]);
        y[k] = ps_tier[k] * t.lambda_max;
    }

    OptimizationResult r;
    r.feasible = true;
    r.restarts = 1;
    r.best_restart = 0;

    auto balance = [&] { return dot(b, y); };
    if (balance() < 0.0) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t l, std::size_t r) { return b[l] < b[r]; });
        for (std::size_t i : order) {
            if (y[i] == 0.0) continue;
            r.trace.reduction_order.push_back(i);
            y[i] = 0.0;
            double const s = balance();
            if (s >= 0.0) {
                y[i] = std::min(s / -b[i], ps_tier[i] * model.tier(i).lambda_max);
                break;
            }
        }
    }

    r.lambda.assign(n, 0.0);
    double ase_sum = 0.0;
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (ps_tier[k] > 0.0) {
            r.lambda[k] = std::clamp(y[k] / ps_tier[k], 0.0, model.tier(k).lambda_max);
        }
        ase_sum += r.lambda[k] * ps_tier[k];
        num += weight[k] * ps_tier[k] * r.lambda[k];
        den += weight[k] * r.lambda[k];
    }
    r.ase = users * std::log2(1.0 + gamma_hat) * ase_sum;
    r.ps = num / den;
    r.ps_exact = r.ps;
    return r;
}

//---------------------------------------------------------------------------//
// General networks: Dinkelbach + sequential linearization
//---------------------------------------------------------------------------//

namespace {

struct Problem {
    std::vector<double> c1, c2, d, halfspace, lambda_max;
    double ase_scale = 0.0;  // gamma^-delta sinc(delta) log2(1 + gamma)
    double ps_scale = 0.0;   // gamma^-delta sinc(delta)
    std::vector<double> c;
};

struct RestartOutcome {
    std::vector<double> lambda;
    double objective = -std::numeric_limits<double>::infinity();
    bool converged = false;
    bool collapsed = false;
    std::vector<DinkelbachStep> dinkelbach;
    std::vector<ScpStep> scp;
};

RestartOutcome run_restart(Problem const& p, std::vector<double> lambda, int restart,
                           GeneralOptions const& opt)
{
    RestartOutcome out;
    if (norm(lambda) == 0.0) {
        out.collapsed = true;
        return out;
    }
    double t = scp_numerator(p.c1, p.c2, lambda) / dot(p.d, lambda);

    for (int outer = 0; outer < opt.max_iters; ++outer) {
        std::vector<double> candidate;
        int inner = 0;
        bool inner_done = false;
        for (; inner < opt.max_iters; ++inner) {
            auto grad = scp_numerator_gradient(p.c1, p.c2, lambda);
            for (std::size_t i = 0; i < grad.size(); ++i) grad[i] -= t * p.d[i];
            candidate = solve_lp_box_halfspace(grad, p.halfspace, p.lambda_max);

            std::vector<double> diff(lambda.size());
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = candidate[i] - lambda[i];
            double const step = norm(diff) / norm(lambda);
            out.scp.push_back({restart, outer, inner, candidate, step});

            if (norm(candidate) == 0.0) {
                out.collapsed = true;
                return out;
            }
            if (step < opt.epsilon) {
                inner_done = true;
                break;
            }
            lambda = candidate;
        }

        double const residual =
            scp_numerator(p.c1, p.c2, candidate) - t * dot(p.d, candidate);
        out.dinkelbach.push_back({restart, outer, t, residual, inner + 1});
        lambda = candidate;
        if (inner_done && residual < opt.epsilon) {
            out.converged = true;
            break;
        }
        t = scp_numerator(p.c1, p.c2, lambda) / dot(p.d, lambda);
    }

    out.lambda = lambda;
    out.objective = p.ase_scale * scp_numerator(p.c1, p.c2, lambda) / dot(p.d, lambda);
    return out;
}

}  // namespace

OptimizationResult optimize_general(NetworkModel const& model, double theta, double gamma_hat,
                                    GeneralOptions const& options)
{
    check_theta(theta);
    if (options.restarts < 1) throw DomainError("optimize_general: restarts must be >= 1");
    if (!(options.epsilon > 0.0)) throw DomainError("optimize_general: epsilon must be positive");
    if (options.max_iters < 1) throw DomainError("optimize_general: max_iters must be >= 1");

    auto const feas = feasibility(model, theta, gamma_hat, PsMode::Asymptotic);
    if (!feas.feasible) return infeasible_result();

    std::size_t const n = model.size();
    auto const coef = coefficient_vectors(model);
    Problem p;
    p.c1 = coef.c1;
    p.c2 = coef.c2;
    p.d = coef.d;
    p.c = coef.c;
    p.lambda_max = model.max_densities();
    p.ps_scale = asymptotic_scale(model, gamma_hat);
    p.ase_scale = p.ps_scale * std::log2(1.0 + gamma_hat);
    p.halfspace.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.halfspace[i] = p.ps_scale * coef.c[i] - theta * coef.d[i];

    OptimizationResult r;
    r.feasible = true;
    r.restarts = options.restarts;
    r.trace.seed = options.seed;

    auto finish = [&](std::vector<double> lambda) {
        r.lambda = std::move(lambda);
        r.ase = p.ase_scale * scp_numerator(p.c1, p.c2, r.lambda) / dot(p.d, r.lambda);
        r.ps = p.ps_scale * dot(p.c, r.lambda) / dot(p.d, r.lambda);
        if (options.rescore_exact) r.ps_exact = ps_exact(model.with_densities(r.lambda), gamma_hat);
        return r;
    };

    std::vector<double> anchor(n, 0.0);
    anchor[feas.ceiling.tier] = p.lambda_max[feas.ceiling.tier];

    // At the ceiling only the best single tier is feasible.
    if (theta >= feas.ceiling.value * (1.0 - 1e-12)) {
        r.best_restart = -1;
        r.trace.used_anchor_start = true;
        return finish(anchor);
    }

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(options.restarts));
    parallel_for(outcomes.size(), [&](std::size_t idx) {
        StreamRng rng(options.seed, {0x6f707469ULL, idx});
        std::vector<double> start(n);
        for (std::size_t i = 0; i < n; ++i) start[i] = rng.uniform_open() * p.lambda_max[i];
        outcomes[idx] = run_restart(p, std::move(start), static_cast<int>(idx), options);
    });

    int best = -1;
    for (std::size_t idx = 0; idx < outcomes.size(); ++idx) {
        auto& o = outcomes[idx];
        r.trace.dinkelbach.insert(r.trace.dinkelbach.end(), o.dinkelbach.begin(), o.dinkelbach.end());
        r.trace.scp.insert(r.trace.scp.end(), o.scp.begin(), o.scp.end());
        if (o.collapsed) {
            r.trace.collapsed_restarts.push_back(static_cast<int>(idx));
            continue;
        }
        if (best < 0 || o.objective > outcomes[static_cast<std::size_t>(best)].objective) {
            best = static_cast<int>(idx);
        }
    }

    if (best < 0) {
        // Every random start collapsed; the single-tier ceiling point is
        // always feasible and gives a deterministic fallback start.
        r.trace.used_anchor_start = true;
        auto o = run_restart(p, anchor, options.restarts, options);
        r.trace.dinkelbach.insert(r.trace.dinkelbach.end(), o.dinkelbach.begin(), o.dinkelbach.end());
        r.trace.scp.insert(r.trace.scp.end(), o.scp.begin(), o.scp.end());
        r.best_restart = options.restarts;
        r.converged = o.converged && !o.collapsed;
        return finish(o.collapsed ? anchor : o.lambda);
    }

    auto& winner = outcomes[static_cast<std::size_t>(best)];
    r.best_restart = best;
    r.converged = winner.converged;
    return finish(winner.lambda);
}

//---------------------------------------------------------------------------//
// Exhaustive grid oracle
//---------------------------------------------------------------------------//

OptimizationResult grid_search_oracle(NetworkModel const& model, double theta, double gamma_hat,
                                      int resolution, PsMode mode)
{
    check_theta(theta);
    std::size_t const n = model.size();
    if (n > 4) throw DomainError("grid_search_oracle: K too large (at most 4 tiers)");
    if (resolution < 50) throw DomainError("grid_search_oracle: resolution must be >= 50");
    if (theta >= 1.0) return infeasible_result();

    // Asymptotic: ASE = scale (u.l)(v.l)/(w.l). Exact U-SDMA: ASE = scale (v.l).
    // Both: p_s = ps_scale (c.l)/(w.l).
    std::vector<double> u, v, w, c;
    double ase_scale = 0.0;
    double ps_scale = 0.0;
    if (mode == PsMode::Asymptotic) {
        auto const coef = coefficient_vectors(model);
        u = coef.c1;
        v = coef.c2;
        w = coef.d;
        c = coef.c;
        ps_scale = asymptotic_scale(model, gamma_hat);
        ase_scale = ps_scale * std::log2(1.0 + gamma_hat);
    } else {
        if (!model.is_unbiased_usdma()) {
            throw DomainError("grid_search_oracle: exact mode requires an unbiased U-SDMA network");
        }
        int const users = model.tier(0).users;
        for (std::size_t k = 0; k < n; ++k) {
            auto const& t = model.tier(k);
            double ps_k = 0.0;
            if (t.lambda_max > 0.0) {
                std::vector<double> lone(n, 0.0);
                lone[k] = t.lambda_max;
                ps_k = ps_exact_tier(model.with_densities(lone), k, gamma_hat);
            }
            double const wk = std::pow(t.power / users, model.delta());
            v.push_back(ps_k);
            w.push_back(wk);
            c.push_back(wk * ps_k);
        }
        ps_scale = 1.0;
        ase_scale = users * std::log2(1.0 + gamma_hat);
    }

    auto const lmax = model.max_densities();
    std::vector<int> idx(n, 0);
    std::vector<double> lambda(n, 0.0);
    std::vector<double> best_lambda;
    double best_ase = -1.0;
    double best_ps = 0.0;

    for (;;) {
        // advance odometer
        std::size_t pos = 0;
        while (pos < n && ++idx[pos] > resolution) idx[pos++] = 0;
        if (pos == n) break;
        for (std::size_t k = 0; k < n; ++k) lambda[k] = lmax[k] * idx[k] / resolution;

        double const den = dot(w, lambda);
        if (!(den > 0.0)) continue;
        double const ps = ps_scale * dot(c, lambda) / den;
        if (ps < theta * (1.0 - 1e-12)) continue;
        double const value = mode == PsMode::Asymptotic
                                 ? ase_scale * dot(u, lambda) * dot(v, lambda) / den
                                 : ase_scale * dot(v, lambda);
        if (value > best_ase) {
            best_ase = value;
            best_ps = ps;
            best_lambda = lambda;
        }
    }

    if (best_lambda.empty()) return infeasible_result();
    OptimizationResult r;
    r.feasible = true;
    r.lambda = best_lambda;
    r.ase = best_ase;
    r.ps = best_ps;
    r.restarts = 0;
    return r;
}

}  // namespace hetnet
