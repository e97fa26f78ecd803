#pragma once

#include <memory>

#include "rieszlab/arithmetic.hpp"
#include "rieszlab/mobius_tail.hpp"
#include "rieszlab/series_config.hpp"

namespace testing_support {

// One 1e6 sieve per test binary.
inline const rieszlab::SeriesConfig& cfg()
{
    static const rieszlab::SeriesConfig c = rieszlab::make_series_config(rieszlab::make_shared_sieve(1'000'000));
    return c;
}

} // namespace testing_support
