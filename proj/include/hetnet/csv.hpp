// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hetnet {

inline constexpr char kToolVersion[] = "1.0.0";

/// Provenance written as "#"-prefixed lines ahead of every CSV body.
struct RunManifest {
    std::string command;
    std::string config_hash;
    std::vector<std::uint64_t> seeds;
    std::string tool_version = kToolVersion;
    std::string started_at;  ///< UTC, ISO 8601
    double wall_seconds = 0.0;
    std::vector<std::string> outputs;
};

/// In-memory CSV table; cells are stored already formatted.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> row);

    [[nodiscard]] std::vector<std::string> const& header() const { return header_; }
    [[nodiscard]] std::vector<std::vector<std::string>> const& rows() const { return rows_; }

    /// RFC 4180 body: CRLF line ends, fields quoted when needed.
    void write_body(std::ostream& os) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// %.12g; NaN becomes an empty field.
std::string format_number(double x);
std::string format_bool(bool b);

void write_manifest(std::ostream& os, RunManifest const& m);
void write_csv(std::ostream& os, RunManifest const& m, CsvTable const& table);

std::string utc_timestamp();

}  // namespace hetnet
