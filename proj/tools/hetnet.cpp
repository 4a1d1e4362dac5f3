// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0
//
// hetnet: coverage, ASE tradeoff and Monte Carlo runs for K-tier multiuser
// MIMO HetNets. Every subcommand writes CSV with a "#" manifest header.
//
//   hetnet ps        configs/fig2.json --gamma-db-from -10 --gamma-db-to 20
//   hetnet tradeoff  configs/fig5.json --gamma-db 5 --method general
//   hetnet simulate  configs/fig2.json --trials 100000 --seed 42 --gamma-db 0 5 10
//   hetnet diagnose  configs/fig3.json

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hetnet/cli.hpp"
#include "hetnet/error.hpp"

namespace {

using hetnet::cli::CommandResult;

int run(std::string const& command, std::string const& config_path, std::string const& output,
        std::function<CommandResult(hetnet::LoadedConfig const&)> const& body)
{
    auto const started = std::chrono::steady_clock::now();
    hetnet::RunManifest manifest;
    manifest.command = command;
    manifest.started_at = hetnet::utc_timestamp();
    manifest.outputs = {output == "-" ? std::string("stdout") : output};

    CommandResult result;
    try {
        auto const cfg = hetnet::load_config(config_path);
        manifest.config_hash = cfg.hash;
        result = body(cfg);
    } catch (hetnet::ValidationError const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return hetnet::cli::kConfigError;
    } catch (hetnet::DomainError const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return hetnet::cli::kConfigError;
    } catch (hetnet::ConvergenceError const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return hetnet::cli::kNonConvergence;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return hetnet::cli::kFailure;
    }

    manifest.seeds = result.seeds;
    manifest.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    if (command == "diagnose") {
        std::cout << result.text;
    } else if (!result.text.empty()) {
        std::cerr << result.text;
    }

    if (output == "-") {
        if (command != "diagnose") hetnet::write_csv(std::cout, manifest, result.table);
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << output << '\n';
            return hetnet::cli::kFailure;
        }
        hetnet::write_csv(out, manifest, result.table);
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coverage, ASE and density optimization for multiuser MIMO HetNets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hetnet::kToolVersion));

    std::string config;
    std::string output = "-";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("config", config, "network config (JSON)")->required();
        sub->add_option("-o,--output", output, "CSV output path, - for stdout");
    };

    hetnet::cli::PsOptions ps;
    auto* ps_cmd = app.add_subcommand("ps", "exact and asymptotic success probability sweep");
    add_common(ps_cmd);
    ps_cmd->add_option("--gamma-db-from", ps.gamma_db_from, "first SIR threshold [dB]");
    ps_cmd->add_option("--gamma-db-to", ps.gamma_db_to, "last SIR threshold [dB]");
    ps_cmd->add_option("--gamma-db-step", ps.gamma_db_step, "threshold step [dB]");
    ps_cmd->add_option("--mode", ps.mode, "exact | asymptotic | both")
        ->check(CLI::IsMember({"exact", "asymptotic", "both"}));

    hetnet::cli::TradeoffOptions tr;
    auto* tr_cmd = app.add_subcommand("tradeoff", "maximum ASE under a reliability requirement");
    add_common(tr_cmd);
    tr_cmd->add_option("--theta-from", tr.theta_from, "first reliability requirement");
    tr_cmd->add_option("--theta-to", tr.theta_to, "last reliability requirement");
    tr_cmd->add_option("--theta-step", tr.theta_step, "requirement step");
    tr_cmd->add_option("--gamma-db", tr.gamma_db, "SIR threshold [dB]");
    tr_cmd->add_option("--method", tr.method, "usdma | general | grid")
        ->check(CLI::IsMember({"usdma", "general", "grid"}));
    tr_cmd->add_option("--restarts", tr.restarts, "random starts (general)");
    tr_cmd->add_option("--seed", tr.seed, "seed for random starts (general)");
    tr_cmd->add_option("--epsilon", tr.epsilon, "stopping tolerance (general)");
    tr_cmd->add_option("--max-iters", tr.max_iters, "iteration cap per loop (general)");
    tr_cmd->add_option("--resolution", tr.resolution, "grid intervals per axis (grid)");
    tr_cmd->add_flag("--rescore-exact", tr.rescore_exact, "append exact p_s of the solution");

    hetnet::cli::SimulateOptions sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo success probability");
    add_common(sim_cmd);
    sim_cmd->add_option("--trials", sim.trials, "number of deployments");
    sim_cmd->add_option("--seed", sim.seed, "random seed");
    sim_cmd->add_option("--gamma-db", sim.gamma_db, "SIR thresholds [dB]")->expected(1, -1);
    sim_cmd->add_option("--radius-m", sim.radius_m, "simulation disc radius, 0 = auto");

    hetnet::cli::DiagnoseOptions diag;
    auto* diag_cmd = app.add_subcommand("diagnose", "structural report: ratios, signs, ceilings");
    add_common(diag_cmd);
    diag_cmd->add_option("--gamma-db", diag.gamma_db, "SIR threshold [dB]");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e);
        return code == 0 ? 0 : hetnet::cli::kConfigError;
    }

    if (*ps_cmd) {
        return run("ps", config, output, [&](auto const& c) { return hetnet::cli::cmd_ps(c, ps); });
    }
    if (*tr_cmd) {
        return run("tradeoff", config, output,
                   [&](auto const& c) { return hetnet::cli::cmd_tradeoff(c, tr); });
    }
    if (*sim_cmd) {
        return run("simulate", config, output,
                   [&](auto const& c) { return hetnet::cli::cmd_simulate(c, sim); });
    }
    return run("diagnose", config, output,
               [&](auto const& c) { return hetnet::cli::cmd_diagnose(c, diag); });
}
