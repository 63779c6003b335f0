#include "udlab/counting.hpp"

#include "udlab/errors.hpp"
#include "udlab/rat_matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <thread>
#include <tuple>

namespace udlab {

unsigned effective_thread_count() {
    if (const char* env = std::getenv("LAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

using CellKey = std::array<std::int64_t, 3>;

// The 13 "positive" neighbor offsets: each unordered pair of adjacent cells
// is visited exactly once.
std::vector<CellKey> positive_offsets() {
    std::vector<CellKey> out;
    for (std::int64_t dx = -1; dx <= 1; ++dx)
        for (std::int64_t dy = -1; dy <= 1; ++dy)
            for (std::int64_t dz = -1; dz <= 1; ++dz) {
                const bool positive = dx > 0 || (dx == 0 && (dy > 0 || (dy == 0 && dz > 0)));
                if (positive) out.push_back({dx, dy, dz});
            }
    return out;
}

struct ScaledGrid {
    ScaledPointSet pts;  // permuted into cell order
    std::vector<std::size_t> original_index;
    std::vector<CellKey> keys;                              // one per cell, sorted
    std::vector<std::pair<std::size_t, std::size_t>> cell;  // [begin, end) per cell

    std::size_t find_cell(const CellKey& key) const {
        auto it = std::lower_bound(keys.begin(), keys.end(), key);
        if (it == keys.end() || *it != key) return keys.size();
        return static_cast<std::size_t>(it - keys.begin());
    }
};

ScaledGrid build_scaled_grid(const ScaledPointSet& base) {
    const std::size_t n = base.size();
    const std::int64_t L = base.scale;
    std::vector<std::pair<CellKey, std::size_t>> tagged(n);
    for (std::size_t i = 0; i < n; ++i)
        tagged[i] = {CellKey{floor_div(base.xs[i], L), floor_div(base.ys[i], L),
                             floor_div(base.zs[i], L)},
                     i};
    std::sort(tagged.begin(), tagged.end());
    ScaledGrid grid;
    grid.pts.scale = L;
    grid.pts.xs.resize(n);
    grid.pts.ys.resize(n);
    grid.pts.zs.resize(n);
    grid.original_index.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = tagged[i].second;
        grid.pts.xs[i] = base.xs[src];
        grid.pts.ys[i] = base.ys[src];
        grid.pts.zs[i] = base.zs[src];
        grid.original_index[i] = src;
    }
    std::size_t begin = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 == n || tagged[i + 1].first != tagged[i].first) {
            grid.keys.push_back(tagged[i].first);
            grid.cell.emplace_back(begin, i + 1);
            begin = i + 1;
        }
    }
    return grid;
}

std::uint64_t grid_count_scaled(const ScaledPointSet& base, Metric metric) {
    const ScaledGrid grid = build_scaled_grid(base);
    const std::vector<CellKey> offsets = positive_offsets();
    const KernelBackend backend = active_kernel_backend();
    const std::size_t ncells = grid.keys.size();

    auto count_cell = [&](std::size_t c) {
        std::uint64_t sum = 0;
        const auto [a0, a1] = grid.cell[c];
        sum += count_unit_self(grid.pts, a0, a1, metric, backend);
        for (const CellKey& off : offsets) {
            const CellKey nb{grid.keys[c][0] + off[0], grid.keys[c][1] + off[1],
                             grid.keys[c][2] + off[2]};
            const std::size_t d = grid.find_cell(nb);
            if (d == ncells) continue;
            const auto [b0, b1] = grid.cell[d];
            sum += count_unit_cross(grid.pts, a0, a1, b0, b1, metric, backend);
        }
        return sum;
    };

    const unsigned threads = std::min<unsigned>(effective_thread_count(),
                                                std::max<std::size_t>(ncells, 1));
    if (threads <= 1) {
        std::uint64_t total = 0;
        for (std::size_t c = 0; c < ncells; ++c) total += count_cell(c);
        return total;
    }
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            std::uint64_t sum = 0;
            for (std::size_t c = t; c < ncells; c += threads) sum += count_cell(c);
            partial[t] = sum;
        });
    }
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (std::uint64_t p : partial) total += p;  // integer sum: order-independent
    return total;
}

// Fallback for datasets without a small common denominator: same cell logic,
// arbitrary-precision predicate, sequential.
std::uint64_t grid_count_exact_fallback(const std::vector<Point3>& points, Metric metric) {
    using Key = std::tuple<long, long, long>;
    auto cell_of = [](const Point3& p) {
        auto floor_long = [](const Rational& q) {
            BigInt f = numerator(q) / denominator(q);
            if (q < 0 && f * denominator(q) != numerator(q)) f -= 1;
            return f.convert_to<long>();
        };
        return Key{floor_long(p.x1), floor_long(p.x2), floor_long(p.x3)};
    };
    std::map<Key, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < points.size(); ++i) cells[cell_of(points[i])].push_back(i);
    std::uint64_t total = 0;
    for (const auto& [key, members] : cells) {
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                total += unit_distance(points[members[a]], points[members[b]], metric);
        for (long dx = -1; dx <= 1; ++dx)
            for (long dy = -1; dy <= 1; ++dy)
                for (long dz = -1; dz <= 1; ++dz) {
                    const bool positive =
                        dx > 0 || (dx == 0 && (dy > 0 || (dy == 0 && dz > 0)));
                    if (!positive) continue;
                    const Key nb{std::get<0>(key) + dx, std::get<1>(key) + dy,
                                 std::get<2>(key) + dz};
                    auto it = cells.find(nb);
                    if (it == cells.end()) continue;
                    for (std::size_t i : members)
                        for (std::size_t j : it->second)
                            total += unit_distance(points[i], points[j], metric);
                }
    }
    return total;
}

}  // namespace

std::uint64_t count_unit_pairs_bruteforce(const std::vector<Point3>& points, Metric metric) {
    if (auto scaled = scale_points(points)) {
        // Exact int64 arithmetic over every pair; no grid, no SIMD dispatch.
        const std::int64_t L = scaled->scale, L2 = L * L;
        const std::size_t n = scaled->size();
        std::uint64_t count = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::int64_t dx = scaled->xs[i] - scaled->xs[j];
                const std::int64_t dy = scaled->ys[i] - scaled->ys[j];
                const std::int64_t dz = scaled->zs[i] - scaled->zs[j];
                if (metric == Metric::Euclid) {
                    count += (dx * dx + dy * dy + dz * dz == L2);
                } else {
                    const std::int64_t adz = dz < 0 ? -dz : dz;
                    count += (dx * dx + dy * dy + adz * L == L2);
                }
            }
        return count;
    }
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            count += unit_distance(points[i], points[j], metric);
    return count;
}

std::uint64_t count_unit_pairs_grid(const std::vector<Point3>& points, Metric metric) {
    if (auto scaled = scale_points(points)) return grid_count_scaled(*scaled, metric);
    return grid_count_exact_fallback(points, metric);
}

std::vector<std::uint32_t> unit_partner_counts(const std::vector<Point3>& points,
                                               Metric metric) {
    std::vector<std::uint32_t> out(points.size(), 0);
    if (auto scaled = scale_points(points)) {
        const ScaledGrid grid = build_scaled_grid(*scaled);
        std::vector<std::uint32_t> permuted(points.size(), 0);
        const std::vector<CellKey> offsets = positive_offsets();
        for (std::size_t c = 0; c < grid.keys.size(); ++c) {
            const auto [a0, a1] = grid.cell[c];
            tally_unit_self(grid.pts, a0, a1, metric, permuted);
            for (const CellKey& off : offsets) {
                const CellKey nb{grid.keys[c][0] + off[0], grid.keys[c][1] + off[1],
                                 grid.keys[c][2] + off[2]};
                const std::size_t d = grid.find_cell(nb);
                if (d == grid.keys.size()) continue;
                const auto [b0, b1] = grid.cell[d];
                tally_unit_cross(grid.pts, a0, a1, b0, b1, metric, permuted);
            }
        }
        for (std::size_t i = 0; i < permuted.size(); ++i)
            out[grid.original_index[i]] = permuted[i];
        return out;
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (unit_distance(points[i], points[j], metric)) {
                ++out[i];
                ++out[j];
            }
    return out;
}

// ---------------------------------------------------------------------------

IncidenceReport incidences_points_circles(const std::vector<Point3>& points,
                                          const std::vector<AnalyticCircle>& circles,
                                          bool keep_pairs) {
    IncidenceReport report;
    report.per_circle.assign(circles.size(), 0);
    for (std::size_t ci = 0; ci < circles.size(); ++ci) {
        const AnalyticCircle& c = circles[ci];
        const Rational plane_offset = dot(c.normal, c.center);
        for (std::size_t pi = 0; pi < points.size(); ++pi) {
            const Point3& p = points[pi];
            if (dot(c.normal, p) != plane_offset) continue;
            if (norm2(p - c.center) != c.radius_sq) continue;
            ++report.count;
            ++report.per_circle[ci];
            if (keep_pairs) report.pairs.emplace_back(pi, ci);
        }
    }
    return report;
}

std::vector<AlgebraicPoint3> two_rich_points(const std::vector<AnalyticCircle>& circles) {
    std::vector<AlgebraicPoint3> found;
    for (std::size_t i = 0; i < circles.size(); ++i)
        for (std::size_t j = i + 1; j < circles.size(); ++j) {
            CircleIntersection x = circle_circle_intersection(circles[i], circles[j]);
            if (x.coincident)
                throw CoincidentInput("circles " + std::to_string(i) + " and " +
                                      std::to_string(j) + " coincide");
            for (auto& p : x.points) found.push_back(std::move(p));
        }
    std::sort(found.begin(), found.end(), alg_lex_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

// ---------------------------------------------------------------------------

RichestCircleResult richest_circle_on_sphere(const Sphere& sphere,
                                             const std::vector<Point3>& on_sphere) {
    for (const Point3& p : on_sphere)
        if (!sphere.contains(p))
            throw NotOnVariety("input point is not on the sphere");
    if (on_sphere.size() < 3)
        throw TooFewPoints("need at least 3 points; smaller sets are capped at 2 trivially");

    // No three points of a sphere are collinear, so each triple spans a plane
    // and the plane cuts the sphere in the circle through the triple.
    std::optional<RichestCircleResult> best;
    const std::size_t m = on_sphere.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c) {
                if (on_sphere[a] == on_sphere[b] || on_sphere[a] == on_sphere[c] ||
                    on_sphere[b] == on_sphere[c])
                    continue;
                const Vec3 normal =
                    cross(on_sphere[b] - on_sphere[a], on_sphere[c] - on_sphere[a]);
                if (is_zero(normal)) continue;
                const Rational offset = dot(normal, on_sphere[a]);
                std::size_t hits = 0;
                for (const Point3& p : on_sphere) hits += (dot(normal, p) == offset);
                if (!best || hits > best->count) {
                    auto circ = circle_from_sphere_plane(sphere, Plane{normal, offset});
                    if (!circ) continue;  // cannot happen with 3 real points
                    best = RichestCircleResult{*circ, hits};
                }
            }
    if (!best)
        throw TooFewPoints("all points coincide; no circle through three distinct points");
    return *best;
}

// ---------------------------------------------------------------------------

namespace {

// Canonical plane key: primitive integer normal with positive leading sign,
// plus the correspondingly scaled offset.
std::array<Rational, 4> plane_key(const Plane& p) {
    BigInt l = boost::multiprecision::lcm(
        boost::multiprecision::lcm(denominator(p.normal.x1), denominator(p.normal.x2)),
        denominator(p.normal.x3));
    Rational scale(l);
    BigInt g = boost::multiprecision::gcd(
        boost::multiprecision::gcd(numerator(p.normal.x1 * scale), numerator(p.normal.x2 * scale)),
        numerator(p.normal.x3 * scale));
    if (g != 0) scale /= Rational(g);
    Vec3 n = scale * p.normal;
    Rational off = scale * p.offset;
    const int lead = n.x1 != 0 ? sign_of(n.x1) : (n.x2 != 0 ? sign_of(n.x2) : sign_of(n.x3));
    if (lead < 0) {
        n = Rational(-1) * n;
        off = -off;
    }
    return {n.x1, n.x2, n.x3, off};
}

// The unique sphere containing two distinct non-coplanar circles, when one
// exists: its center lies on both axes and the squared radii must agree.
std::optional<Sphere> common_sphere(const AnalyticCircle& c1, const AnalyticCircle& c2) {
    const Vec3 cross_axes = cross(c1.normal, c2.normal);
    if (!is_zero(cross_axes)) {
        // Axes o1 + s n1 and o2 + t n2: solve the 3x2 system exactly.
        RatMatrix sys(3, 2);
        sys.at(0, 0) = c1.normal.x1;
        sys.at(1, 0) = c1.normal.x2;
        sys.at(2, 0) = c1.normal.x3;
        sys.at(0, 1) = -c2.normal.x1;
        sys.at(1, 1) = -c2.normal.x2;
        sys.at(2, 1) = -c2.normal.x3;
        const Vec3 rhs = c2.center - c1.center;
        const Rational r[3] = {rhs.x1, rhs.x2, rhs.x3};
        // Pick two independent rows (a nonzero component of the cross
        // product names them) and solve; the third row must agree.
        int drop;
        if (cross_axes.x3 != 0)
            drop = 2;
        else if (cross_axes.x2 != 0)
            drop = 1;
        else
            drop = 0;
        // cross(n1,n2).x3 = n1.x1 n2.x2 - n1.x2 n2.x1 is the determinant of
        // rows {0,1}; dropping the matching row keeps an invertible 2x2.
        const int rows[2] = {drop == 0 ? 1 : 0, drop == 2 ? 1 : 2};
        const Rational a = sys.at(rows[0], 0), b = sys.at(rows[0], 1);
        const Rational c = sys.at(rows[1], 0), d = sys.at(rows[1], 1);
        const Rational det = a * d - b * c;
        const Rational s = (r[rows[0]] * d - b * r[rows[1]]) / det;
        const Rational t = (a * r[rows[1]] - r[rows[0]] * c) / det;
        if (sys.at(drop, 0) * s + sys.at(drop, 1) * t != r[drop]) return std::nullopt;
        if (c1.radius_sq + s * s * norm2(c1.normal) != c2.radius_sq + t * t * norm2(c2.normal))
            return std::nullopt;
        return Sphere{c1.center + s * c1.normal, c1.radius_sq + s * s * norm2(c1.normal)};
    }
    // Parallel axes: a common sphere needs a common axis line.
    const Vec3 offset = c2.center - c1.center;
    if (!is_zero(cross(offset, c1.normal))) return std::nullopt;
    const Rational n2sq = norm2(c1.normal);
    const Rational e = dot(offset, c1.normal) / n2sq;  // c2.center = c1.center + e n1
    if (e == 0) return std::nullopt;  // concentric coaxial circles of distinct radii
    // radius match: r1^2 + s^2 |n|^2 = r2^2 + (s - e)^2 |n|^2, linear in s.
    const Rational s = (c2.radius_sq - c1.radius_sq + e * e * n2sq) / (2 * e * n2sq);
    return Sphere{c1.center + s * c1.normal, c1.radius_sq + s * s * n2sq};
}

}  // namespace

std::size_t max_circles_common_plane_or_sphere(const std::vector<AnalyticCircle>& circles) {
    if (circles.empty()) return 0;
    std::size_t best = 1;
    std::map<std::array<Rational, 4>, std::size_t> coplanar;
    for (const AnalyticCircle& c : circles)
        best = std::max(best, ++coplanar[plane_key(c.plane())]);
    std::map<std::array<Rational, 4>, std::set<std::size_t>> cospherical;
    for (std::size_t i = 0; i < circles.size(); ++i)
        for (std::size_t j = i + 1; j < circles.size(); ++j) {
            const auto sphere = common_sphere(circles[i], circles[j]);
            if (!sphere) continue;
            auto& members = cospherical[{sphere->center.x1, sphere->center.x2,
                                         sphere->center.x3, sphere->radius_sq}];
            members.insert(i);
            members.insert(j);
            best = std::max(best, members.size());
        }
    return best;
}

double bound_gk_pseudosegments(double m, double n, double B, double N) {
    return std::sqrt(m) * std::pow(n, 0.75) + std::pow(m, 2.0 / 3) * std::cbrt(n) * std::cbrt(B) +
           m + N;
}

double bound_point_circle_r3(double m, double n, double q) {
    return std::sqrt(m) * std::pow(n, 0.75) + std::pow(m, 2.0 / 3) * std::pow(n, 13.0 / 15) +
           std::cbrt(m) * std::pow(n, 8.0 / 9) + n * std::pow(q, 2.0 / 3) + m;
}

double bound_aks_point_circle(double m, double n) {
    return std::pow(m, 6.0 / 11) * std::pow(n, 9.0 / 11) +
           std::pow(m, 2.0 / 3) * std::pow(n, 2.0 / 3) + m + n;
}

double bound_rich_spheres(double m, double k) {
    return std::pow(m, 4.0) * std::pow(k, -5.0) + m / k;
}

double bound_kst(double m, double n, double s, double t) {
    return std::pow(t, 1.0 / s) * m * std::pow(n, 1.0 - 1.0 / s) + s * n;
}

BoundCheckReport bound_checker(double m, double n, double degeneracy, double pseudo_segments,
                               double observed) {
    BoundCheckReport report;
    auto add = [&](const std::string& name, double value) {
        report.entries[name] = {value, value > 0 ? observed / value : 0.0};
    };
    add("gk_pseudosegments", bound_gk_pseudosegments(m, n, degeneracy, pseudo_segments));
    add("point_circle_r3", bound_point_circle_r3(m, n, degeneracy));
    add("aks_point_circle", bound_aks_point_circle(m, n));
    add("rich_spheres_k2", bound_rich_spheres(m, 2.0));
    add("kst_s3_t2", bound_kst(m, n, 3.0, 2.0));
    return report;
}

}  // namespace udlab
