#include "rieszlab/zeros.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string_view>

#include "rieszlab/errors.hpp"
#include "rieszlab/specfun.hpp"

namespace rieszlab {

namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

std::vector<ZetaZero> load_zeros(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open zeros file '" + path + "'");

    std::vector<ZetaZero> zeros;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view s(line);
        if (const auto hash = s.find('#'); hash != std::string_view::npos)
            s = s.substr(0, hash);
        s = trim(s);
        if (s.empty())
            continue;

        const std::string where = path + ":" + std::to_string(lineno);
        double t = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), t);
        if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(t) || t <= 0.0)
            throw DataError(where + ": not a positive decimal");

        const auto dot = s.find('.');
        const int digits = dot == std::string_view::npos ? 0 : static_cast<int>(s.size() - dot - 1);
        if (digits < 12)
            throw DataError(where + ": need at least 12 decimals, got " + std::to_string(digits));
        if (!zeros.empty() && t <= zeros.back().t)
            throw DataError(where + ": zeros must be strictly ascending");
        if (t > 120.0)
            throw DataError(where + ": zero above the supported height 120");

        const double residual = std::abs(zeta_complex({0.5, t}));
        if (!(residual < 1e-8))
            throw DataError(where + ": |zeta(1/2 + it)| = " + std::to_string(residual) +
                            " is not below 1e-8");
        zeros.push_back({t, digits});
    }
    if (zeros.empty())
        throw DataError("zeros file '" + path + "' has no entries");
    return zeros;
}

std::string default_zeros_path()
{
    return RIESZLAB_DEFAULT_ZEROS;
}

std::string resolve_zeros_path(const std::string& flag)
{
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("RIESZLAB_ZEROS"); env != nullptr && *env != '\0')
        return env;
    return default_zeros_path();
}

} // namespace rieszlab
