// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#include "hetnet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hetnet/coverage.hpp"
#include "hetnet/error.hpp"
#include "hetnet/metrics.hpp"
#include "hetnet/montecarlo.hpp"
#include "hetnet/optimize.hpp"
#include "hetnet/parallel.hpp"

namespace hetnet::cli {

namespace {

std::string tier_column(char const* prefix, std::size_t k)
{
    return std::string(prefix) + std::to_string(k + 1);
}

}  // namespace

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

std::vector<double> linear_sweep(double from, double to, double step, char const* what)
{
    if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step)) {
        throw ValidationError(std::string(what) + " sweep bounds must be finite");
    }
    if (!(step > 0.0)) throw ValidationError(std::string(what) + " sweep step must be positive");
    if (from > to) throw ValidationError(std::string(what) + " sweep is empty (from > to)");
    auto const count = static_cast<long>(std::floor((to - from) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) out.push_back(from + static_cast<double>(i) * step);
    return out;
}

//---------------------------------------------------------------------------//

CommandResult cmd_ps(LoadedConfig const& cfg, PsOptions const& opt)
{
    bool const exact = opt.mode == "exact" || opt.mode == "both";
    bool const asym = opt.mode == "asymptotic" || opt.mode == "both";
    if (!exact && !asym) throw ValidationError("--mode must be exact, asymptotic or both");

    auto const grid = linear_sweep(opt.gamma_db_from, opt.gamma_db_to, opt.gamma_db_step, "gamma-db");
    auto const& model = cfg.model;
    std::size_t const n = model.size();

    std::vector<std::string> header{"gamma_db"};
    if (exact) header.push_back("ps_exact");
    if (asym) header.push_back("ps_asym");
    if (exact) {
        for (std::size_t k = 0; k < n; ++k) header.push_back(tier_column("ps_exact_tier_", k));
    }
    if (asym) {
        for (std::size_t k = 0; k < n; ++k) header.push_back(tier_column("ps_asym_tier_", k));
    }

    struct Row {
        double exact = 0.0, asym = 0.0;
        std::vector<double> exact_tier, asym_tier;
    };
    std::vector<Row> rows(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        double const g = db_to_linear(grid[i]);
        Row r;
        if (exact) {
            r.exact = ps_exact(model, g);
            r.exact_tier = ps_exact_tiers(model, g);
        }
        if (asym) {
            r.asym = ps_asymptotic(model, g);
            r.asym_tier = ps_asymptotic_tiers(model, g);
        }
        rows[i] = std::move(r);
    });

    CommandResult out;
    std::ostringstream warn;
    for (std::size_t i = 1; exact && i < rows.size(); ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            double const prev = rows[i - 1].exact_tier[k];
            double const cur = rows[i].exact_tier[k];
            if (std::isnan(cur)) continue;
            if (cur > prev + 1e-12) {
                std::ostringstream os;
                os << "p_s(" << k + 1 << ") increased between " << grid[i - 1] << " and " << grid[i]
                   << " dB; success probability must be nonincreasing in the threshold";
                throw ConvergenceError(os.str());
            }
        }
    }
    if (exact && asym) {
        double last_gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (grid[i] < 5.0 - 1e-9) continue;
            double const gap = std::abs(rows[i].asym - rows[i].exact);
            if (gap > last_gap) {
                warn << "warning: asymptotic gap grows at " << grid[i] << " dB (" << gap << " > "
                     << last_gap << ")\n";
            }
            last_gap = gap;
        }
    }

    out.table = CsvTable(header);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto const& r = rows[i];
        std::vector<std::string> cells{format_number(grid[i])};
        if (exact) cells.push_back(format_number(r.exact));
        if (asym) cells.push_back(format_number(r.asym));
        if (exact) {
            for (double v : r.exact_tier) cells.push_back(format_number(v));
        }
        if (asym) {
            for (double v : r.asym_tier) cells.push_back(format_number(v));
        }
        out.table.add_row(std::move(cells));
    }
    out.text = warn.str();
    return out;
}

//---------------------------------------------------------------------------//

CommandResult cmd_tradeoff(LoadedConfig const& cfg, TradeoffOptions const& opt)
{
    if (opt.method != "usdma" && opt.method != "general" && opt.method != "grid") {
        throw ValidationError("--method must be usdma, general or grid");
    }
    auto const& model = cfg.model;
    if (opt.method == "usdma" && !model.is_unbiased_usdma()) {
        throw ValidationError("method usdma requires an unbiased U-SDMA config "
                              "(all bias = 1 and equal users)");
    }
    auto const thetas = linear_sweep(opt.theta_from, opt.theta_to, opt.theta_step, "theta");
    for (double th : thetas) {
        if (th < -1e-12 || th > 1.0 + 1e-12) throw ValidationError("theta must lie in [0, 1]");
    }
    double const gamma_hat = db_to_linear(opt.gamma_db);
    std::size_t const n = model.size();

    GeneralOptions gen;
    gen.restarts = opt.restarts;
    gen.seed = opt.seed;
    gen.epsilon = opt.epsilon;
    gen.max_iters = opt.max_iters;
    gen.rescore_exact = opt.rescore_exact;

    std::vector<OptimizationResult> results(thetas.size());
    auto solve = [&](std::size_t i) {
        double const th = std::clamp(thetas[i], 0.0, 1.0);
        if (opt.method == "usdma") {
            results[i] = optimize_usdma(model, th, gamma_hat);
        } else if (opt.method == "grid") {
            results[i] = grid_search_oracle(model, th, gamma_hat, opt.resolution);
            if (opt.rescore_exact && results[i].feasible) {
                results[i].ps_exact = ps_exact(model.with_densities(results[i].lambda), gamma_hat);
            }
        } else {
            results[i] = optimize_general(model, th, gamma_hat, gen);
        }
    };
    // optimize_general already spreads its restarts over the workers.
    if (opt.method == "general") {
        for (std::size_t i = 0; i < thetas.size(); ++i) solve(i);
    } else {
        parallel_for(thetas.size(), solve);
    }

    std::vector<std::string> header{"theta", "feasible", "ase_km2", "ase_m2", "ps_achieved"};
    for (std::size_t k = 0; k < n; ++k) header.push_back(tier_column("lambda_", k));
    header.push_back("restarts");
    header.push_back("converged");
    if (opt.rescore_exact) header.push_back("ps_exact");

    CommandResult out;
    out.table = CsvTable(header);
    out.seeds = {opt.seed};
    bool any_feasible = false;
    bool all_converged = true;
    double const nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        auto const& r = results[i];
        std::vector<std::string> cells{format_number(thetas[i]), format_bool(r.feasible)};
        cells.push_back(format_number(r.feasible ? r.ase : nan));
        cells.push_back(format_number(r.feasible ? r.ase_per_m2() : nan));
        cells.push_back(format_number(r.feasible ? r.ps : nan));
        for (std::size_t k = 0; k < n; ++k) {
            cells.push_back(format_number(r.feasible ? r.lambda[k] : nan));
        }
        cells.push_back(std::to_string(r.restarts));
        cells.push_back(format_bool(r.converged));
        if (opt.rescore_exact) cells.push_back(format_number(r.feasible ? r.ps_exact : nan));
        out.table.add_row(std::move(cells));
        any_feasible = any_feasible || r.feasible;
        all_converged = all_converged && r.converged;
    }
    if (!any_feasible) {
        out.exit_code = kInfeasibleOnly;
    } else if (!all_converged) {
        out.exit_code = kNonConvergence;
    }
    return out;
}

//---------------------------------------------------------------------------//

CommandResult cmd_simulate(LoadedConfig const& cfg, SimulateOptions const& opt)
{
    if (opt.trials < 100) throw ValidationError("--trials must be at least 100");
    if (opt.gamma_db.empty()) throw ValidationError("--gamma-db needs at least one value");

    SimConfig sim;
    sim.trials = opt.trials;
    sim.seed = opt.seed;
    sim.region_radius_m = opt.radius_m;
    for (double db : opt.gamma_db) sim.gamma_hat_grid.push_back(db_to_linear(db));
    auto const rep = simulate_ps(cfg.model, sim);
    std::size_t const n = cfg.model.size();

    std::vector<std::string> header{"gamma_db", "ps_hat", "stderr"};
    for (std::size_t k = 0; k < n; ++k) header.push_back(tier_column("assoc_freq_tier_", k));
    for (std::size_t k = 0; k < n; ++k) header.push_back(tier_column("ps_hat_tier_", k));
    header.push_back("seed");
    header.push_back("radius_m");

    CommandResult out;
    out.table = CsvTable(header);
    out.seeds = {opt.seed};
    for (std::size_t g = 0; g < opt.gamma_db.size(); ++g) {
        std::vector<std::string> cells{format_number(opt.gamma_db[g]), format_number(rep.ps_hat[g]),
                                       format_number(rep.std_error[g])};
        for (std::size_t k = 0; k < n; ++k) cells.push_back(format_number(rep.association_freq[k]));
        for (std::size_t k = 0; k < n; ++k) cells.push_back(format_number(rep.tier_success[k][g]));
        cells.push_back(std::to_string(opt.seed));
        cells.push_back(format_number(rep.region.radius_m));
        out.table.add_row(std::move(cells));
    }
    std::ostringstream os;
    os << "trials " << rep.trials_used << ", redraws " << rep.redraws << ", radius "
       << rep.region.radius_m << " m (" << (rep.region.automatic ? "auto" : "fixed")
       << "), expected BSs in disc " << rep.region.expected_total << " total, "
       << rep.region.expected_densest << " densest tier\n";
    out.text = os.str();
    return out;
}

//---------------------------------------------------------------------------//

CommandResult cmd_diagnose(LoadedConfig const& cfg, DiagnoseOptions const& opt)
{
    auto const model = cfg.model.at_max_densities();
    double const gamma_hat = db_to_linear(opt.gamma_db);
    std::size_t const n = model.size();

    auto const ratio = reliability_ratios(model);
    auto const signs = monotonicity_signs(model);
    auto const assoc = association_probabilities(model);
    auto const asym_tier = ps_asymptotic_tiers(model, gamma_hat);
    auto const asym_max = ps_max(model, gamma_hat, PsMode::Asymptotic);

    CommandResult out;
    out.table = CsvTable({"tier", "c_over_d", "sign_at_lambda_max", "association_prob",
                          "ps_asym_tier"});
    for (std::size_t k = 0; k < n; ++k) {
        out.table.add_row({std::to_string(k + 1), format_number(ratio[k]), std::to_string(signs[k]),
                           format_number(assoc[k]), format_number(asym_tier[k])});
    }

    std::ostringstream os;
    os.precision(6);
    os << "tiers " << n << ", alpha " << model.alpha() << ", gamma " << opt.gamma_db << " dB\n";
    for (std::size_t k = 0; k < n; ++k) {
        os << "tier " << k + 1 << ": c/d = " << ratio[k] << ", sign at lambda_max = "
           << (signs[k] > 0 ? "+1" : signs[k] < 0 ? "-1" : "0") << '\n';
    }
    bool const invariant = std::all_of(ratio.begin(), ratio.end(), [&](double r) {
        return std::abs(r - ratio.front()) <= 1e-14 * ratio.front();
    });
    if (invariant) os << "invariance: p_s independent of all densities\n";

    os << "ps_max (asymptotic) = " << asym_max.value << " at tier " << asym_max.tier + 1
       << (asym_max.tied ? " (tie, lowest index)" : "") << '\n';
    PsMax ceiling = asym_max;
    if (model.is_unbiased_usdma()) {
        ceiling = ps_max(model, gamma_hat, PsMode::Exact);
        os << "ps_max (exact, U-SDMA) = " << ceiling.value << " at tier " << ceiling.tier + 1
           << (ceiling.tied ? " (tie, lowest index)" : "") << '\n';
    }
    os << "max tier = " << ceiling.tier + 1 << '\n';
    os << "feasibility ceiling: theta <= " << ceiling.value << '\n';
    out.text = os.str();
    return out;
}

}  // namespace hetnet::cli
