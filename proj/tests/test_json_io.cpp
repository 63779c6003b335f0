#include "udlab/errors.hpp"
#include "udlab/json_io.hpp"

#include <doctest.h>

using namespace udlab;

TEST_CASE("point and circle JSON round trips") {
    const Point3 p{Rational(1, 3), Rational(-7, 2), Rational(4)};
    const json pj = point_to_json(p);
    CHECK(pj.at("x") == "1/3");
    CHECK(pj.at("y") == "-7/2");
    CHECK(pj.at("z") == "4");
    CHECK(point_from_json(pj, "/p") == p);

    const AnalyticCircle c{Point3{0, Rational(1, 2), 0}, Rational(9, 4), Vec3{0, 0, 3}};
    const AnalyticCircle back = circle_from_json(circle_to_json(c), "/c");
    CHECK(same_circle(back, c));

    const Circle pair(Point3{0, 0, 0}, Point3{1, 0, 0});
    const json pair_json = circle_to_json(pair);
    CHECK(pair_json.contains("pair"));
    const AnalyticCircle from_pair = circle_from_json(pair_json, "/c");
    CHECK(same_circle(from_pair, to_analytic(pair)));
}

TEST_CASE("file-level round trips") {
    const std::vector<Point3> pts{Point3{1, 2, 3}, Point3{Rational(1, 7), 0, Rational(-2, 9)}};
    CHECK(points_from_file(points_file(pts)) == pts);

    const std::vector<AnalyticCircle> circles{
        AnalyticCircle{Point3{0, 0, 0}, 1, Vec3{0, 0, 1}},
        AnalyticCircle{Point3{5, 0, 1}, Rational(1, 2), Vec3{1, 1, 1}}};
    const auto back = circles_from_file(circles_file(circles));
    REQUIRE(back.size() == 2);
    CHECK(same_circle(back[0], circles[0]));
    CHECK(same_circle(back[1], circles[1]));
}

TEST_CASE("config errors carry JSON-pointer locations") {
    try {
        point_from_json(json{{"x", "1/2"}, {"y", "oops"}, {"z", "3"}}, "/points/4");
        CHECK(false);
    } catch (const ConfigError& e) {
        CHECK(e.where == "/points/4/y");
    }
    try {
        circle_from_json(json{{"center", point_to_json(Point3{0, 0, 0})},
                              {"radius_sq", "1"},
                              {"normal", json::array({"0", "0", "0"})}},
                         "/circles/2");
        CHECK(false);
    } catch (const ConfigError& e) {
        CHECK(e.where == "/circles/2/normal");
    }
    CHECK_THROWS_AS(points_from_file(json{{"nope", 1}}), ConfigError);
    // Degenerate pair form is rejected with a located error.
    CHECK_THROWS_AS(
        circle_from_json(json{{"pair", json::array({point_to_json(Point3{0, 0, 0}),
                                                    point_to_json(Point3{0, 0, 0})})}},
                         "/c"),
        ConfigError);
}

TEST_CASE("algebraic points serialize with quadext strings") {
    const AlgebraicPoint3 p{QuadExt(Rational(1, 2)), QuadExt(0, Rational(1, 2), 3), QuadExt(0)};
    const json j = alg_point_to_json(p);
    CHECK(j.at("x") == "1/2");
    CHECK(j.at("y") == "0+1/2*sqrt(3)");
    CHECK(j.at("z") == "0");
}
