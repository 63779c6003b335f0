#include "udlab/families.hpp"

#include "udlab/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace udlab {

std::vector<Point3> gen_example1(unsigned b) {
    if (b == 0) throw OutOfRange("b must be positive");
    const long lb = static_cast<long>(b);
    std::vector<Rational> a_values, b_values;
    for (long k = 0; k <= 3 * lb; ++k) a_values.emplace_back(k, lb);
    for (long k = 0; k <= 9 * lb * lb; ++k) b_values.emplace_back(k, lb * lb);
    std::vector<Point3> points;
    points.reserve(a_values.size() * a_values.size() * b_values.size());
    for (const Rational& x1 : a_values)
        for (const Rational& x2 : a_values)
            for (const Rational& x3 : b_values) points.push_back(Point3{x1, x2, x3});
    return points;
}

bool in_example1_middle_region(const Point3& p) {
    return p.x1 >= 1 && p.x1 <= 2 && p.x2 >= 1 && p.x2 <= 2 && p.x3 >= 1 && p.x3 <= 2;
}

// ---------------------------------------------------------------------------

PencilFamily gen_pencil(const Rational& h, std::size_t k, std::uint64_t seed) {
    if (!(h > 0 && h < 1)) throw OutOfRange("pencil height must satisfy 0 < h < 1");
    const Rational rho = 1 - h * h;
    const auto radius = exact_sqrt(rho);
    if (!radius)
        throw NonRationalLocus("locus radius sqrt(" + rat_to_string(rho) + ") is irrational");
    PencilFamily family;
    family.base_plus = Point3{0, 0, h};
    family.base_minus = Point3{0, 0, -h};

    SplitMix64 rng(seed);
    auto center_at = [&](const Rational& t) {
        const Rational denom = 1 + t * t;
        return Point3{*radius * (1 - t * t) / denom, *radius * 2 * t / denom, Rational(0)};
    };
    std::vector<Point3> centers;
    int guard = 0;
    while (centers.size() < 2 * k && guard++ < 10000) {
        const Rational t(rng.range(-40, 40), rng.range(1, 12));
        const Point3 c = center_at(t);
        bool fresh = true;
        for (const Point3& seen : centers) fresh = fresh && !(seen == c);
        if (fresh) centers.push_back(c);
    }
    if (centers.size() < 2 * k)
        throw std::logic_error("pencil center sampling failed to produce enough points");
    for (std::size_t i = 0; i < k; ++i)
        family.circles.emplace_back(centers[2 * i], centers[2 * i + 1]);
    return family;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> grid_cell_assignment(const std::vector<Point3>& points) {
    using Key = std::tuple<long, long, long>;
    auto floor_long = [](const Rational& q) {
        BigInt f = numerator(q) / denominator(q);
        if (q < 0 && f * denominator(q) != numerator(q)) f -= 1;
        return f.convert_to<long>();
    };
    std::map<Key, std::size_t> ids;
    std::vector<std::size_t> assignment(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Key key{floor_long(points[i].x1), floor_long(points[i].x2),
                      floor_long(points[i].x3)};
        auto [it, inserted] = ids.emplace(key, ids.size());
        assignment[i] = it->second;
    }
    return assignment;
}

PipelineResult gen_sphere_circle_pipeline(const std::vector<Point3>& centers,
                                          const std::vector<std::size_t>& cell_assignment) {
    if (centers.size() != cell_assignment.size())
        throw std::invalid_argument("cell assignment size mismatch");
    std::size_t num_cells = 0;
    for (std::size_t c : cell_assignment) num_cells = std::max(num_cells, c + 1);
    std::vector<std::vector<std::size_t>> cells(num_cells);
    for (std::size_t i = 0; i < centers.size(); ++i) cells[cell_assignment[i]].push_back(i);

    PipelineResult result;
    result.eligible_pairs_per_cell.assign(num_cells, 0);
    for (std::size_t c = 0; c < num_cells; ++c) {
        const auto& members = cells[c];
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const Point3& p = centers[members[a]];
                const Point3& q = centers[members[b]];
                const Rational d2 = norm2(p - q);
                if (!(d2 > 0 && d2 < 4)) continue;
                ++result.eligible_pairs_per_cell[c];
                result.circles.push_back(to_analytic(Circle(p, q)));
                for (const Point3& r : centers)
                    result.direct_triples += (norm2(r - p) == 1 && norm2(r - q) == 1);
            }
    }
    const Rational one(1);
    for (const AnalyticCircle& circ : result.circles) {
        const Rational offset = dot(circ.normal, circ.center);
        for (const Point3& r : centers)
            result.circle_incidences +=
                (dot(circ.normal, r) == offset && norm2(r - circ.center) == circ.radius_sq);
    }
    return result;
}

// ---------------------------------------------------------------------------

namespace {

// Divisors of 720720 = 2^4 * 3^2 * 5 * 7 * 11 * 13 up to the bound: keeps the
// lcm of any drawn set at most 720720 < 2^20.
std::vector<long> smooth_denominators(long bound) {
    std::vector<long> out;
    for (long d = 1; d <= std::min(bound, 720720L); ++d)
        if (720720 % d == 0) out.push_back(d);
    return out;
}

Rational random_coordinate(SplitMix64& rng, const std::vector<long>& denominators, long span) {
    const long den = denominators[rng.below(denominators.size())];
    const long num = rng.range(-span * den, span * den);
    return Rational(num, den);
}

}  // namespace

std::vector<AnalyticCircle> gen_coplanar_family(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw OutOfRange("coplanar family needs n >= 2");
    SplitMix64 rng(seed);
    const std::vector<long> dens = smooth_denominators(60);
    std::vector<AnalyticCircle> out;
    int guard = 0;
    while (out.size() < n && guard++ < 100000) {
        AnalyticCircle c{Point3{random_coordinate(rng, dens, 8), random_coordinate(rng, dens, 8),
                                Rational(0)},
                         Rational(rng.range(1, 36), rng.range(1, 6)), Vec3{0, 0, 1}};
        bool fresh = true;
        for (const AnalyticCircle& seen : out) fresh = fresh && !same_circle(seen, c);
        if (fresh) out.push_back(std::move(c));
    }
    return out;
}

std::vector<Point3> gen_random_points(std::size_t count, std::uint64_t seed,
                                      long denominator_bound) {
    SplitMix64 rng(seed);
    const std::vector<long> dens = smooth_denominators(denominator_bound);
    std::vector<Point3> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(Point3{random_coordinate(rng, dens, 10), random_coordinate(rng, dens, 10),
                             random_coordinate(rng, dens, 10)});
    return out;
}

RandomConfig gen_random_config(std::size_t n_circles, std::size_t m_points, std::uint64_t seed,
                               long denominator_bound) {
    SplitMix64 rng(seed);
    const std::vector<long> dens = smooth_denominators(std::min(denominator_bound, 60L));
    RandomConfig config;
    int guard = 0;
    while (config.circles.size() < n_circles && guard++ < 100000) {
        Vec3 normal{Rational(rng.range(-5, 5)), Rational(rng.range(-5, 5)),
                    Rational(rng.range(-5, 5))};
        if (is_zero(normal)) continue;
        AnalyticCircle c{Point3{random_coordinate(rng, dens, 8), random_coordinate(rng, dens, 8),
                                random_coordinate(rng, dens, 8)},
                         Rational(rng.range(1, 48), rng.range(1, 12)), normal};
        bool fresh = true;
        for (const AnalyticCircle& seen : config.circles) fresh = fresh && !same_circle(seen, c);
        if (fresh) config.circles.push_back(std::move(c));
    }
    const std::vector<long> point_dens = smooth_denominators(denominator_bound);
    for (std::size_t i = 0; i < m_points; ++i)
        config.points.push_back(Point3{random_coordinate(rng, point_dens, 10),
                                       random_coordinate(rng, point_dens, 10),
                                       random_coordinate(rng, point_dens, 10)});
    return config;
}

std::vector<Point3> gen_grid_points(std::size_t per_axis) {
    std::vector<Point3> out;
    out.reserve(per_axis * per_axis * per_axis);
    for (std::size_t i = 0; i < per_axis; ++i)
        for (std::size_t j = 0; j < per_axis; ++j)
            for (std::size_t k = 0; k < per_axis; ++k)
                out.push_back(Point3{Rational(static_cast<long>(i)),
                                     Rational(static_cast<long>(j)),
                                     Rational(static_cast<long>(k))});
    return out;
}

// ---------------------------------------------------------------------------

Rotation find_generic_rotation(const std::vector<AnalyticCircle>& circles, SplitMix64& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        const Rotation rot = random_rotation(rng);
        bool generic = true;
        for (const AnalyticCircle& c : circles)
            generic = generic && (rot.apply(c).normal.x3 != 0);
        if (generic) return rot;
    }
    throw std::logic_error("no generic rotation found (input unexpectedly adversarial)");
}

std::vector<AnalyticCircle> apply_rotation(const Rotation& rot,
                                           const std::vector<AnalyticCircle>& circles) {
    std::vector<AnalyticCircle> out;
    out.reserve(circles.size());
    for (const AnalyticCircle& c : circles) out.push_back(rot.apply(c));
    return out;
}

std::vector<Point3> apply_rotation(const Rotation& rot, const std::vector<Point3>& points) {
    std::vector<Point3> out;
    out.reserve(points.size());
    for (const Point3& p : points) out.push_back(rot.apply(p));
    return out;
}

}  // namespace udlab
