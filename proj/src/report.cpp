#include "rieszlab/report.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <ostream>

#include <json.hpp>

namespace rieszlab {

namespace {

using Json = nlohmann::ordered_json;

// Rounded to 15 significant digits; nlohmann then prints the shortest
// representation of the rounded double. NaN and infinities become null.
Json number(double v)
{
    if (!std::isfinite(v))
        return nullptr;
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
    double rounded = 0.0;
    std::from_chars(buf, res.ptr, rounded);
    return rounded;
}

Json named(const NamedValues& values)
{
    Json obj = Json::object();
    for (const auto& [k, v] : values)
        obj[k] = number(v);
    return obj;
}

// Grid checks repeat the parameter name, so params are a list of pairs.
Json param_list(const NamedValues& values)
{
    Json arr = Json::array();
    for (const auto& [k, v] : values)
        arr.push_back(Json::array({k, number(v)}));
    return arr;
}

} // namespace

std::string library_version()
{
    return RIESZLAB_VERSION;
}

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
    double rounded = 0.0;
    std::from_chars(buf, res.ptr, rounded);
    res = std::to_chars(buf, buf + sizeof buf, rounded);
    return std::string(buf, res.ptr);
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string render_json(const RunManifest& manifest, std::span<const CheckResult> results,
                        const std::string& generated_at)
{
    Json params = Json::object();
    for (const auto& [k, v] : manifest.params)
        params[k] = v;

    Json doc;
    doc["schema"] = kReportSchema;
    doc["header"] = {
        {"tool", "rieszlab"},
        {"version", library_version()},
        {"generated_at", generated_at},
        {"manifest",
         {{"command", manifest.command},
          {"params", params},
          {"tol_overrides", named(manifest.tol_overrides)},
          {"sieve_limit", manifest.sieve_limit},
          {"zeros_path", manifest.zeros_path},
          {"budget", manifest.budget}}},
    };

    Json arr = Json::array();
    for (const auto& r : results) {
        arr.push_back({{"id", r.id},
                       {"params", param_list(r.params)},
                       {"lhs", number(r.lhs)},
                       {"rhs", number(r.rhs)},
                       {"abs_resid", number(r.abs_resid)},
                       {"rel_resid", number(r.rel_resid)},
                       {"tol", number(r.tol)},
                       {"tol_kind", std::string(to_string(r.tol_kind))},
                       {"status", std::string(to_string(r.status))},
                       {"notes", r.notes},
                       {"diagnostics", named(r.diagnostics)}});
    }
    doc["results"] = std::move(arr);

    const Summary s = summarize(results);
    doc["summary"] = {{"total", results.size()},
                      {"pass", s.pass},
                      {"fail", s.fail},
                      {"inconclusive", s.inconclusive},
                      {"report_only", s.report_only}};
    return doc.dump(2) + "\n";
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv(std::ostream& os, std::span<const std::string> header,
               std::span<const std::vector<std::string>> rows)
{
    auto line = [&os](std::span<const std::string> fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i)
                os << ',';
            os << csv_field(fields[i]);
        }
        os << "\r\n";
    };
    line(header);
    for (const auto& row : rows)
        line(row);
}

void write_results_csv(std::ostream& os, std::span<const CheckResult> results)
{
    const std::vector<std::string> header = {"id",        "params", "lhs", "rhs",    "abs_resid",
                                             "rel_resid", "tol",    "tol_kind", "status", "notes"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : results) {
        std::string params;
        for (const auto& [k, v] : r.params) {
            if (!params.empty())
                params += ';';
            params += k + "=" + format_number(v);
        }
        rows.push_back({r.id, params, format_number(r.lhs), format_number(r.rhs), format_number(r.abs_resid),
                        format_number(r.rel_resid), format_number(r.tol), std::string(to_string(r.tol_kind)),
                        std::string(to_string(r.status)), r.notes});
    }
    write_csv(os, header, rows);
}

} // namespace rieszlab
