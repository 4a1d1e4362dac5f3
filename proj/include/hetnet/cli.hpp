// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hetnet/config.hpp"
#include "hetnet/csv.hpp"

namespace hetnet::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kConfigError = 2,
    kInfeasibleOnly = 3,
    kNonConvergence = 4,
};

/// What a subcommand produced; the front end adds the manifest and does I/O.
struct CommandResult {
    CsvTable table{{}};
    std::string text;      ///< human-readable report (diagnose) or warnings
    int exit_code = kOk;
    std::vector<std::uint64_t> seeds;
};

double db_to_linear(double db);

/// from, from + step, ... up to `to` inclusive (1e-9 slack). Throws
/// ValidationError for an empty sweep or nonpositive step.
std::vector<double> linear_sweep(double from, double to, double step, char const* what);

struct PsOptions {
    double gamma_db_from = -10.0;
    double gamma_db_to = 20.0;
    double gamma_db_step = 1.0;
    std::string mode = "both";  ///< exact | asymptotic | both
};

CommandResult cmd_ps(LoadedConfig const& cfg, PsOptions const& opt);

struct TradeoffOptions {
    double theta_from = 0.0;
    double theta_to = 0.8;
    double theta_step = 0.05;
    double gamma_db = 0.0;
    std::string method = "general";  ///< usdma | general | grid
    int restarts = 20;
    std::uint64_t seed = 1;
    double epsilon = 1e-6;
    int max_iters = 1000;
    int resolution = 100;
    bool rescore_exact = false;
};

CommandResult cmd_tradeoff(LoadedConfig const& cfg, TradeoffOptions const& opt);

struct SimulateOptions {
    long trials = 100'000;
    std::uint64_t seed = 42;
    std::vector<double> gamma_db{0.0};
    double radius_m = 0.0;
};

CommandResult cmd_simulate(LoadedConfig const& cfg, SimulateOptions const& opt);

struct DiagnoseOptions {
    double gamma_db = 0.0;
};

CommandResult cmd_diagnose(LoadedConfig const& cfg, DiagnoseOptions const& opt);

}  // namespace hetnet::cli
