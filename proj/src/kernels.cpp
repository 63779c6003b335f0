#include "udlab/kernels.hpp"

#include <cstdlib>
#include <mutex>

#if defined(__x86_64__) || defined(__i386__)
#define UDLAB_X86 1
#include <immintrin.h>
#else
#define UDLAB_X86 0
#endif

namespace udlab {

namespace {

constexpr std::int64_t kMaxScale = std::int64_t(1) << 20;
constexpr std::int64_t kMaxScaled = std::int64_t(1) << 26;

std::optional<KernelBackend> g_forced;
std::mutex g_force_mutex;

}  // namespace

std::optional<ScaledPointSet> scale_points(const std::vector<Point3>& points) {
    BigInt lcm = 1;
    for (const Point3& p : points) {
        for (const Rational* c : {&p.x1, &p.x2, &p.x3}) {
            lcm = boost::multiprecision::lcm(lcm, denominator(*c));
            if (lcm > kMaxScale) return std::nullopt;
        }
    }
    ScaledPointSet out;
    out.scale = lcm.convert_to<std::int64_t>();
    out.xs.reserve(points.size());
    out.ys.reserve(points.size());
    out.zs.reserve(points.size());
    for (const Point3& p : points) {
        for (const Rational* c : {&p.x1, &p.x2, &p.x3}) {
            BigInt scaled = numerator(*c) * (lcm / denominator(*c));
            if (scaled > kMaxScaled || scaled < -kMaxScaled) return std::nullopt;
            const std::int64_t v = scaled.convert_to<std::int64_t>();
            if (c == &p.x1)
                out.xs.push_back(v);
            else if (c == &p.x2)
                out.ys.push_back(v);
            else
                out.zs.push_back(v);
        }
    }
    return out;
}

bool cpu_supports_avx2() {
#if UDLAB_X86
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

void force_kernel_backend(std::optional<KernelBackend> backend) {
    std::lock_guard<std::mutex> lock(g_force_mutex);
    g_forced = backend;
}

KernelBackend active_kernel_backend() {
    {
        std::lock_guard<std::mutex> lock(g_force_mutex);
        if (g_forced) return *g_forced;
    }
    if (const char* env = std::getenv("LAB_SIMD")) {
        const std::string v(env);
        if (v == "scalar") return KernelBackend::Scalar;
        if (v == "avx2") return cpu_supports_avx2() ? KernelBackend::Avx2 : KernelBackend::Scalar;
    }
    return cpu_supports_avx2() ? KernelBackend::Avx2 : KernelBackend::Scalar;
}

// ---------------------------------------------------------------------------
// Scalar reference kernels

namespace {

inline bool unit_scaled_euclid(std::int64_t dx, std::int64_t dy, std::int64_t dz,
                               std::int64_t scale_sq) {
    return dx * dx + dy * dy + dz * dz == scale_sq;
}

inline bool unit_scaled_dstar(std::int64_t dx, std::int64_t dy, std::int64_t dz,
                              std::int64_t scale, std::int64_t scale_sq) {
    const std::int64_t adz = dz < 0 ? -dz : dz;
    return dx * dx + dy * dy + adz * scale == scale_sq;
}

template <Metric M>
std::uint64_t cross_scalar(const ScaledPointSet& pts, std::size_t a0, std::size_t a1,
                           std::size_t b0, std::size_t b1) {
    const std::int64_t L = pts.scale, L2 = L * L;
    std::uint64_t count = 0;
    for (std::size_t i = a0; i < a1; ++i) {
        const std::int64_t x = pts.xs[i], y = pts.ys[i], z = pts.zs[i];
        for (std::size_t j = b0; j < b1; ++j) {
            const std::int64_t dx = x - pts.xs[j], dy = y - pts.ys[j], dz = z - pts.zs[j];
            if constexpr (M == Metric::Euclid)
                count += unit_scaled_euclid(dx, dy, dz, L2);
            else
                count += unit_scaled_dstar(dx, dy, dz, L, L2);
        }
    }
    return count;
}

template <Metric M>
std::uint64_t self_scalar(const ScaledPointSet& pts, std::size_t a0, std::size_t a1) {
    std::uint64_t count = 0;
    for (std::size_t i = a0; i < a1; ++i) count += cross_scalar<M>(pts, i, i + 1, i + 1, a1);
    return count;
}

}  // namespace

// ---------------------------------------------------------------------------
// AVX2 kernels: identical integer arithmetic, four 64-bit lanes at a time.
// Deltas fit in 32 bits, so the 32x32->64 signed multiply is exact.

#if UDLAB_X86

namespace {

__attribute__((target("avx2"))) inline __m256i abs_epi64(__m256i v) {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i neg = _mm256_sub_epi64(zero, v);
    const __m256i is_neg = _mm256_cmpgt_epi64(zero, v);
    return _mm256_blendv_epi8(v, neg, is_neg);
}

template <Metric M>
__attribute__((target("avx2"))) std::uint64_t cross_avx2(const ScaledPointSet& pts,
                                                         std::size_t a0, std::size_t a1,
                                                         std::size_t b0, std::size_t b1) {
    const std::int64_t L = pts.scale, L2 = L * L;
    const __m256i vL = _mm256_set1_epi64x(L);
    const __m256i vL2 = _mm256_set1_epi64x(L2);
    std::uint64_t count = 0;
    for (std::size_t i = a0; i < a1; ++i) {
        const __m256i ax = _mm256_set1_epi64x(pts.xs[i]);
        const __m256i ay = _mm256_set1_epi64x(pts.ys[i]);
        const __m256i az = _mm256_set1_epi64x(pts.zs[i]);
        std::size_t j = b0;
        for (; j + 4 <= b1; j += 4) {
            const __m256i dx = _mm256_sub_epi64(
                ax, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&pts.xs[j])));
            const __m256i dy = _mm256_sub_epi64(
                ay, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&pts.ys[j])));
            const __m256i dz = _mm256_sub_epi64(
                az, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&pts.zs[j])));
            const __m256i dx2 = _mm256_mul_epi32(dx, dx);
            const __m256i dy2 = _mm256_mul_epi32(dy, dy);
            __m256i sum;
            if constexpr (M == Metric::Euclid) {
                sum = _mm256_add_epi64(_mm256_add_epi64(dx2, dy2), _mm256_mul_epi32(dz, dz));
            } else {
                sum = _mm256_add_epi64(_mm256_add_epi64(dx2, dy2),
                                       _mm256_mul_epi32(abs_epi64(dz), vL));
            }
            const __m256i eq = _mm256_cmpeq_epi64(sum, vL2);
            const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(eq));
            count += static_cast<unsigned>(__builtin_popcount(mask));
        }
        for (; j < b1; ++j) {
            const std::int64_t dx = pts.xs[i] - pts.xs[j];
            const std::int64_t dy = pts.ys[i] - pts.ys[j];
            const std::int64_t dz = pts.zs[i] - pts.zs[j];
            if constexpr (M == Metric::Euclid)
                count += unit_scaled_euclid(dx, dy, dz, L2);
            else
                count += unit_scaled_dstar(dx, dy, dz, L, L2);
        }
    }
    return count;
}

template <Metric M>
__attribute__((target("avx2"))) std::uint64_t self_avx2(const ScaledPointSet& pts,
                                                        std::size_t a0, std::size_t a1) {
    std::uint64_t count = 0;
    for (std::size_t i = a0; i < a1; ++i) count += cross_avx2<M>(pts, i, i + 1, i + 1, a1);
    return count;
}

}  // namespace

#endif  // UDLAB_X86

std::uint64_t count_unit_cross(const ScaledPointSet& pts, std::size_t a0, std::size_t a1,
                               std::size_t b0, std::size_t b1, Metric metric,
                               KernelBackend backend) {
#if UDLAB_X86
    if (backend == KernelBackend::Avx2) {
        return metric == Metric::Euclid ? cross_avx2<Metric::Euclid>(pts, a0, a1, b0, b1)
                                        : cross_avx2<Metric::DStar>(pts, a0, a1, b0, b1);
    }
#else
    (void)backend;
#endif
    return metric == Metric::Euclid ? cross_scalar<Metric::Euclid>(pts, a0, a1, b0, b1)
                                    : cross_scalar<Metric::DStar>(pts, a0, a1, b0, b1);
}

std::uint64_t count_unit_self(const ScaledPointSet& pts, std::size_t a0, std::size_t a1,
                              Metric metric, KernelBackend backend) {
#if UDLAB_X86
    if (backend == KernelBackend::Avx2) {
        return metric == Metric::Euclid ? self_avx2<Metric::Euclid>(pts, a0, a1)
                                        : self_avx2<Metric::DStar>(pts, a0, a1);
    }
#else
    (void)backend;
#endif
    return metric == Metric::Euclid ? self_scalar<Metric::Euclid>(pts, a0, a1)
                                    : self_scalar<Metric::DStar>(pts, a0, a1);
}

void tally_unit_cross(const ScaledPointSet& pts, std::size_t a0, std::size_t a1, std::size_t b0,
                      std::size_t b1, Metric metric, std::vector<std::uint32_t>& tally) {
    const std::int64_t L = pts.scale, L2 = L * L;
    for (std::size_t i = a0; i < a1; ++i)
        for (std::size_t j = b0; j < b1; ++j) {
            const std::int64_t dx = pts.xs[i] - pts.xs[j];
            const std::int64_t dy = pts.ys[i] - pts.ys[j];
            const std::int64_t dz = pts.zs[i] - pts.zs[j];
            const bool hit = metric == Metric::Euclid ? unit_scaled_euclid(dx, dy, dz, L2)
                                                      : unit_scaled_dstar(dx, dy, dz, L, L2);
            if (hit) {
                ++tally[i];
                ++tally[j];
            }
        }
}

void tally_unit_self(const ScaledPointSet& pts, std::size_t a0, std::size_t a1, Metric metric,
                     std::vector<std::uint32_t>& tally) {
    for (std::size_t i = a0; i < a1; ++i) tally_unit_cross(pts, i, i + 1, i + 1, a1, metric, tally);
}

}  // namespace udlab
