#pragma once

#include "udlab/geometry.hpp"
#include "udlab/rational.hpp"

namespace udlab {

/**
 * Metrics whose unit condition the counters evaluate exactly:
 *   Euclid:  |x-y|^2 = 1
 *   DStar:   (x1-y1)^2 + (x2-y2)^2 + |x3-y3| = 1
 * Both are rational predicates, so "exactly 1" is decidable.
 */
enum class Metric { Euclid, DStar };

inline bool unit_distance(const Point3& x, const Point3& y, Metric metric) {
    const Rational dx = x.x1 - y.x1;
    const Rational dy = x.x2 - y.x2;
    const Rational dz = x.x3 - y.x3;
    if (metric == Metric::Euclid) return dx * dx + dy * dy + dz * dz == 1;
    return dx * dx + dy * dy + rat_abs(dz) == 1;
}

}  // namespace udlab
