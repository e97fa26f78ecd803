#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rieszlab/verify.hpp"

namespace rieszlab {

inline constexpr int kReportSchema = 1;

// Everything needed to reproduce a run; serialized into the report header.
struct RunManifest
{
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    NamedValues tol_overrides;
    std::uint64_t sieve_limit = 0;
    std::string zeros_path;
    std::size_t budget = 0;
};

std::string library_version();

// Shortest decimal that survives a round trip through 15 significant digits.
std::string format_number(double v);

// UTC, ISO 8601 to the second.
std::string utc_timestamp();

// Report layout (schema 1):
//   {"schema", "header": {tool, version, generated_at, manifest}, "results": [...], "summary": {...}}
// generated_at is the only field that differs between identical runs.
std::string render_json(const RunManifest& manifest, std::span<const CheckResult> results,
                        const std::string& generated_at);

// One row per result: id, params ("name=value;..."), lhs, rhs, residuals,
// tolerance, status, notes.
void write_results_csv(std::ostream& os, std::span<const CheckResult> results);

// Plain numeric table. Fields are quoted only when they need it.
void write_csv(std::ostream& os, std::span<const std::string> header,
               std::span<const std::vector<std::string>> rows);

std::string csv_field(const std::string& s);

} // namespace rieszlab
