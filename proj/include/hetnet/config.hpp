// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hetnet/model.hpp"

namespace hetnet {

/// Network description read from a JSON config file:
///
///   { "alpha": 4,
///     "tiers": [ { "lambda_per_km2": 100, "lambda_max_per_km2": 100,
///                  "power_w": 6.3, "bias": "1/U", "antennas": 8, "users": 4 } ] }
///
/// `bias` is a positive number or the string "1/U" (B_k = 1/U_k);
/// `lambda_max_per_km2` defaults to `lambda_per_km2`.
struct LoadedConfig {
    RawNetwork raw;
    NetworkModel model;
    std::string canonical;  ///< normalized JSON text the hash is taken over
    std::string hash;       ///< "fnv1a64:<hex>"
};

/// Parses and validates config text. Errors are ValidationError with the
/// source name and a line/column (syntax) or field path (schema).
LoadedConfig parse_config(std::string_view text, std::string const& source = "<config>");

LoadedConfig load_config(std::string const& path);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace hetnet
