#include "udlab/counting.hpp"
#include "udlab/errors.hpp"
#include "udlab/families.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace udlab;

TEST_CASE("point-circle incidences on the sphere-pair example") {
    const std::vector<Point3> points{Point3{Rational(4, 5), 0, 0}, Point3{0, Rational(4, 5), 0},
                                     Point3{1, 1, 1}};
    const Circle pair(Point3{0, 0, Rational(3, 5)}, Point3{0, 0, Rational(-3, 5)});
    const IncidenceReport report =
        incidences_points_circles(points, {to_analytic(pair)}, /*keep_pairs=*/true);
    CHECK(report.count == 2);
    CHECK(report.pairs.size() == 2);
    CHECK(report.per_circle[0] == 2);

    CHECK(incidences_points_circles(points, {}).count == 0);
}

TEST_CASE("incidences on a pencil hit every circle at both base points") {
    const PencilFamily pencil = gen_pencil(Rational(3, 5), 6, 41);
    std::vector<AnalyticCircle> circles;
    for (const Circle& c : pencil.circles) circles.push_back(to_analytic(c));
    const IncidenceReport report = incidences_points_circles(
        {pencil.base_plus, pencil.base_minus}, circles);
    CHECK(report.count == 2 * circles.size());
}

TEST_CASE("two-rich points") {
    const AnalyticCircle far_a{Point3{0, 0, 0}, 1, Vec3{0, 0, 1}};
    const AnalyticCircle far_b{Point3{10, 0, 0}, 1, Vec3{0, 0, 1}};
    CHECK(two_rich_points({far_a, far_b}).empty());

    const AnalyticCircle near_b{Point3{1, 0, 0}, 1, Vec3{0, 0, 1}};
    const auto classical = two_rich_points({far_a, near_b});
    CHECK(classical.size() == 2);

    const PencilFamily pencil = gen_pencil(Rational(3, 5), 5, 42);
    std::vector<AnalyticCircle> circles;
    for (const Circle& c : pencil.circles) circles.push_back(to_analytic(c));
    const auto rich = two_rich_points(circles);
    REQUIRE(rich.size() == 2);
    CHECK(rich[0].is_rational());
    const Point3 lo = rich[0].to_point3(), hi = rich[1].to_point3();
    CHECK(((lo == pencil.base_minus && hi == pencil.base_plus) ||
           (lo == pencil.base_plus && hi == pencil.base_minus)));

    CHECK_THROWS_AS(two_rich_points({far_a, far_a}), CoincidentInput);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Point3> random_sphere_points(const Point3& center, std::size_t count,
                                         std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Point3> out;
    while (out.size() < count) {
        const Point3 p = rational_sphere_point(Rational(rng.range(-9, 9), rng.range(1, 7)),
                                               Rational(rng.range(-9, 9), rng.range(1, 7)),
                                               center);
        bool fresh = true;
        for (const Point3& seen : out) fresh = fresh && !(seen == p);
        if (fresh) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("richest circle on a sphere: engineered configurations") {
    const Point3 q{0, 0, 0};
    const Sphere sphere{q, 1};
    // Points with v = 0 lie in the plane x2 = 0, hence on one circle.
    std::vector<Point3> pts;
    for (long u : {0, 1, 2, 5}) pts.push_back(rational_sphere_point(Rational(u), 0, q));
    pts.push_back(rational_sphere_point(Rational(1), Rational(1), q));  // off that circle
    const auto result = richest_circle_on_sphere(sphere, pts);
    CHECK(result.count == 4);
    for (long u : {0, 1, 2, 5})
        CHECK(result.circle.contains(rational_sphere_point(Rational(u), 0, q)));

    // Fully concyclic input: the maximum is everyone.
    std::vector<Point3> concyclic;
    for (long u : {0, 1, -1, 3, -4, 7}) concyclic.push_back(rational_sphere_point(Rational(u), 0, q));
    CHECK(richest_circle_on_sphere(sphere, concyclic).count == concyclic.size());

    const Point3 pole = rational_sphere_point(0, 0, q);
    const Point3 east = rational_sphere_point(1, 0, q);
    CHECK_THROWS_AS(richest_circle_on_sphere(sphere, {pole, east}), TooFewPoints);
    CHECK_THROWS_AS(richest_circle_on_sphere(sphere, {Point3{5, 5, 5}, pole, east}),
                    NotOnVariety);
}

TEST_CASE("richest circle agrees with the circumcenter oracle") {
    for (std::uint64_t seed : {101u, 102u, 103u}) {
        const Point3 center{Rational(seed % 5), Rational(1, 2), 0};
        const Sphere sphere{center, 1};
        const auto pts = random_sphere_points(center, 24, seed);
        const auto result = richest_circle_on_sphere(sphere, pts);
        CHECK(result.count == testsupport::richest_circle_oracle(sphere, pts));
        CHECK(result.count <= pts.size());
    }
}

// ---------------------------------------------------------------------------

TEST_CASE("bound formulas evaluate as published") {
    // Unit inputs: every formula is at least 1.
    for (double v : {bound_gk_pseudosegments(1, 1, 1, 1), bound_point_circle_r3(1, 1, 1),
                     bound_aks_point_circle(1, 1), bound_rich_spheres(1, 1), bound_kst(1, 1, 3, 2)})
        CHECK(v >= 1.0);
    // KST with s=3, t=2 at m = n = 10^6: 2^(1/3) 10^10 + 3 10^6.
    const double kst = bound_kst(1e6, 1e6, 3, 2);
    CHECK(kst == doctest::Approx(std::cbrt(2.0) * 1e10 + 3e6).epsilon(1e-12));

    const BoundCheckReport report = bound_checker(1000, 1000, 10, 4000, 12345);
    CHECK(report.entries.size() == 5);
    for (const auto& [name, entry] : report.entries) {
        CHECK(std::isfinite(entry.first));
        CHECK(std::isfinite(entry.second));
    }
}
