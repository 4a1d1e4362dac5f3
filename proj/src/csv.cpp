// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#include "hetnet/csv.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <stdexcept>

namespace hetnet {

namespace {

constexpr char kEol[] = "\r\n";

void write_field(std::ostream& os, std::string const& f)
{
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
        os << f;
        return;
    }
    os << '"';
    for (char ch : f) {
        if (ch == '"') os << '"';
        os << ch;
    }
    os << '"';
}

void write_record(std::ostream& os, std::vector<std::string> const& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        write_field(os, fields[i]);
    }
    os << kEol;
}

}  // namespace

void CsvTable::add_row(std::vector<std::string> row)
{
    if (row.size() != header_.size()) {
        throw std::logic_error("CsvTable: row width does not match header");
    }
    rows_.push_back(std::move(row));
}

void CsvTable::write_body(std::ostream& os) const
{
    write_record(os, header_);
    for (auto const& r : rows_) write_record(os, r);
}

std::string format_number(double x)
{
    if (std::isnan(x)) return {};
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_bool(bool b)
{
    return b ? "true" : "false";
}

void write_manifest(std::ostream& os, RunManifest const& m)
{
    os << "# command: " << m.command << kEol;
    os << "# config_hash: " << m.config_hash << kEol;
    os << "# seeds:";
    for (auto s : m.seeds) os << ' ' << s;
    os << kEol;
    os << "# tool_version: " << m.tool_version << kEol;
    os << "# started_at: " << m.started_at << kEol;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", m.wall_seconds);
    os << "# wall_seconds: " << buf << kEol;
    os << "# outputs:";
    for (auto const& o : m.outputs) os << ' ' << o;
    os << kEol;
}

void write_csv(std::ostream& os, RunManifest const& m, CsvTable const& table)
{
    write_manifest(os, m);
    table.write_body(os);
}

std::string utc_timestamp()
{
    auto const now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace hetnet
