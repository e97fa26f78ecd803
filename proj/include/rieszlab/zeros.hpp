#pragma once

#include <string>
#include <vector>

namespace rieszlab {

// Nontrivial zero 1/2 + i t of zeta.
struct ZetaZero
{
    double t = 0.0;
    int source_digits = 0;  // decimals given in the source file
};

// Parses one positive decimal per line ('#' starts a comment) and validates
// every entry: at least 12 decimals, strictly ascending, |zeta(1/2 + it)| < 1e-8.
// Any failure is a DataError.
std::vector<ZetaZero> load_zeros(const std::string& path);

// The shipped table.
std::string default_zeros_path();

// flag if non-empty, else $RIESZLAB_ZEROS if set, else the shipped table.
std::string resolve_zeros_path(const std::string& flag);

} // namespace rieszlab
