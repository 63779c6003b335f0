#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace udlab {

/** (size, count) series for empirical exponent fits; sizes strictly increase. */
struct ScalingSeries {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
};

/**
 * Least-squares slope of log(count) against log(n). This is the one value in
 * the library computed in floating point, and it is reported as approximate;
 * needs at least 3 entries (TooFewPoints) with positive counts
 * (NonPositiveCount).
 */
double estimate_exponent(const ScalingSeries& series);

}  // namespace udlab
