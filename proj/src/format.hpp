#pragma once

#include <cstdio>
#include <string>

namespace rieszlab {

// Short %g rendering for error messages.
inline std::string fmt_g(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace rieszlab
