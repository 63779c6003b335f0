#pragma once

#include "udlab/geometry.hpp"
#include "udlab/metric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace udlab {

/**
 * Exact integer form of a rational point set: every coordinate times the
 * common denominator `scale`. The unit conditions become integer identities,
 *   Euclid:  dx^2 + dy^2 + dz^2 == scale^2
 *   DStar:   dx^2 + dy^2 + |dz|*scale == scale^2,
 * so the hot counting loops run in plain int64 without ever rounding.
 *
 * Conversion succeeds when the lcm of all denominators stays below 2^20 and
 * every scaled coordinate stays below 2^26 in magnitude; squares then fit
 * comfortably in 64 bits (and in the 32x32->64 SIMD multiply). Otherwise the
 * counters fall back to the arbitrary-precision path.
 */
struct ScaledPointSet {
    std::int64_t scale = 0;
    std::vector<std::int64_t> xs, ys, zs;

    std::size_t size() const { return xs.size(); }
};

std::optional<ScaledPointSet> scale_points(const std::vector<Point3>& points);

/**
 * Pair-predicate kernels. The scalar kernel is the reference; the AVX2 kernel
 * is an exact drop-in (same integer arithmetic, four lanes at a time) selected
 * at runtime. Equivalence of the two is asserted by tests, not assumed.
 */
enum class KernelBackend { Scalar, Avx2 };

// Backend that will actually run: honors force_kernel_backend() overrides and
// the LAB_SIMD environment variable ("scalar" / "avx2" / "auto"), then CPU
// capability.
KernelBackend active_kernel_backend();
// Testing hook; pass nullopt to restore auto-detection.
void force_kernel_backend(std::optional<KernelBackend> backend);
bool cpu_supports_avx2();

// Unit pairs between two disjoint index ranges [a0,a1) x [b0,b1).
std::uint64_t count_unit_cross(const ScaledPointSet& pts, std::size_t a0, std::size_t a1,
                               std::size_t b0, std::size_t b1, Metric metric,
                               KernelBackend backend);
// Unordered unit pairs inside one index range.
std::uint64_t count_unit_self(const ScaledPointSet& pts, std::size_t a0, std::size_t a1,
                              Metric metric, KernelBackend backend);

// Per-point variants used by partner-count reports (scalar arithmetic).
void tally_unit_cross(const ScaledPointSet& pts, std::size_t a0, std::size_t a1, std::size_t b0,
                      std::size_t b1, Metric metric, std::vector<std::uint32_t>& tally);
void tally_unit_self(const ScaledPointSet& pts, std::size_t a0, std::size_t a1, Metric metric,
                     std::vector<std::uint32_t>& tally);

}  // namespace udlab
