#pragma once

#include <iosfwd>

#include "rieszlab/errors.hpp"

namespace rieszlab {

// 0 clean, 1 a check FAILed, 2 domain/range/precision/data error,
// 64 usage or configuration error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitUsage = 64;

int exit_code_for(ErrorKind kind);

// Entry point of the rieszlab tool; all output goes to out and err.
// Subcommands: eval, verify, scan, decay.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rieszlab
