// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#include "hetnet/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hetnet/error.hpp"

namespace hetnet {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string const& source, std::string const& where, std::string const& what)
{
    throw ValidationError(source + ": " + where + ": " + what);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

double number_field(json const& obj, char const* key, std::string const& source,
                    std::string const& path)
{
    auto const& v = obj.at(key);
    if (!v.is_number()) fail(source, path + "." + key, "must be a number");
    double const x = v.get<double>();
    if (!std::isfinite(x)) fail(source, path + "." + key, "must be finite");
    return x;
}

int integer_field(json const& obj, char const* key, std::string const& source,
                  std::string const& path)
{
    auto const& v = obj.at(key);
    if (!v.is_number_integer()) fail(source, path + "." + key, "must be an integer");
    return v.get<int>();
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

LoadedConfig parse_config(std::string_view text, std::string const& source)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (json::parse_error const& e) {
        auto const [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        std::ostringstream os;
        os << "line " << line << ", column " << col;
        fail(source, os.str(), "JSON syntax error");
    }

    if (!doc.is_object()) fail(source, "top level", "must be a JSON object");
    static std::set<std::string> const top_keys{"alpha", "tiers"};
    for (auto const& [key, _] : doc.items()) {
        if (!top_keys.count(key)) fail(source, key, "unknown field");
    }
    if (!doc.contains("alpha")) fail(source, "alpha", "missing required field");
    if (!doc.contains("tiers")) fail(source, "tiers", "missing required field");

    RawNetwork raw;
    raw.alpha = number_field(doc, "alpha", source, "config");
    auto const& tiers = doc.at("tiers");
    if (!tiers.is_array()) fail(source, "tiers", "must be an array");

    static std::set<std::string> const tier_keys{"lambda_per_km2", "lambda_max_per_km2", "power_w",
                                                 "bias", "antennas", "users"};
    static char const* const required[] = {"lambda_per_km2", "power_w", "antennas", "users"};
    for (std::size_t k = 0; k < tiers.size(); ++k) {
        auto const& t = tiers[k];
        std::string const path = "tiers[" + std::to_string(k) + "]";
        if (!t.is_object()) fail(source, path, "must be an object");
        for (auto const& [key, _] : t.items()) {
            if (!tier_keys.count(key)) fail(source, path + "." + key, "unknown field");
        }
        for (char const* key : required) {
            if (!t.contains(key)) fail(source, path + "." + key, "missing required field");
        }
        RawTier rt;
        rt.lambda = number_field(t, "lambda_per_km2", source, path);
        if (t.contains("lambda_max_per_km2")) {
            rt.lambda_max = number_field(t, "lambda_max_per_km2", source, path);
        }
        rt.power = number_field(t, "power_w", source, path);
        rt.antennas = integer_field(t, "antennas", source, path);
        rt.users = integer_field(t, "users", source, path);
        if (!t.contains("bias")) {
            rt.bias = 1.0;
        } else if (t.at("bias").is_string()) {
            if (t.at("bias").get<std::string>() != "1/U") {
                fail(source, path + ".bias", "string form must be \"1/U\"");
            }
            rt.bias = 1.0 / rt.users;
        } else {
            rt.bias = number_field(t, "bias", source, path);
        }
        raw.tiers.push_back(rt);
    }

    auto model = [&] {
        try {
            return validate(raw);
        } catch (ValidationError const& e) {
            throw ValidationError(source + ": " + e.what());
        }
    }();
    LoadedConfig cfg{raw, std::move(model), doc.dump(), {}};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(cfg.canonical)));
    cfg.hash = std::string("fnv1a64:") + buf;
    return cfg;
}

LoadedConfig load_config(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError(path + ": cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

}  // namespace hetnet
