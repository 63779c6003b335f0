#include "udlab/reports.hpp"

#include "udlab/errors.hpp"

#include <cmath>

namespace udlab {

double estimate_exponent(const ScalingSeries& series) {
    const std::size_t n = series.entries.size();
    if (n < 3) throw TooFewPoints("exponent fit needs at least 3 data points");
    for (std::size_t i = 0; i < n; ++i) {
        if (series.entries[i].second == 0)
            throw NonPositiveCount("count at index " + std::to_string(i) + " is zero");
        if (i > 0 && series.entries[i].first <= series.entries[i - 1].first)
            throw OutOfRange("sizes must be strictly increasing");
    }
    double sx = 0, sy = 0;
    for (const auto& [size, count] : series.entries) {
        sx += std::log(static_cast<double>(size));
        sy += std::log(static_cast<double>(count));
    }
    const double mx = sx / static_cast<double>(n), my = sy / static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (const auto& [size, count] : series.entries) {
        const double dx = std::log(static_cast<double>(size)) - mx;
        const double dy = std::log(static_cast<double>(count)) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    return sxy / sxx;
}

}  // namespace udlab
