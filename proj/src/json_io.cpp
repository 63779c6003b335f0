#include "udlab/json_io.hpp"

#include "udlab/errors.hpp"

#include <fstream>

namespace udlab {

json rat_to_json(const Rational& q) { return rat_to_string(q); }

Rational rat_from_json(const json& j, const std::string& pointer) {
    if (!j.is_string()) throw ConfigError(pointer, "expected a rational string");
    auto q = rat_from_string(j.get<std::string>());
    if (!q) throw ConfigError(pointer, "malformed rational '" + j.get<std::string>() + "'");
    return *q;
}

json point_to_json(const Point3& p) {
    return json{{"x", rat_to_json(p.x1)}, {"y", rat_to_json(p.x2)}, {"z", rat_to_json(p.x3)}};
}

Point3 point_from_json(const json& j, const std::string& pointer) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("z"))
        throw ConfigError(pointer, "expected a point object with x, y, z");
    return Point3{rat_from_json(j.at("x"), pointer + "/x"), rat_from_json(j.at("y"), pointer + "/y"),
                  rat_from_json(j.at("z"), pointer + "/z")};
}

json quad_to_json(const QuadExt& q) { return q.str(); }

json alg_point_to_json(const AlgebraicPoint3& p) {
    return json{{"x", quad_to_json(p.x1)}, {"y", quad_to_json(p.x2)}, {"z", quad_to_json(p.x3)}};
}

json circle_to_json(const AnalyticCircle& c) {
    return json{{"center", point_to_json(c.center)},
                {"radius_sq", rat_to_json(c.radius_sq)},
                {"normal", json::array({rat_to_json(c.normal.x1), rat_to_json(c.normal.x2),
                                        rat_to_json(c.normal.x3)})}};
}

json circle_to_json(const Circle& c) {
    return json{
        {"pair", json::array({point_to_json(c.first_center()), point_to_json(c.second_center())})}};
}

AnalyticCircle circle_from_json(const json& j, const std::string& pointer) {
    if (j.is_object() && j.contains("pair")) {
        const json& pair = j.at("pair");
        if (!pair.is_array() || pair.size() != 2)
            throw ConfigError(pointer + "/pair", "expected exactly two sphere centers");
        const Point3 p = point_from_json(pair.at(0), pointer + "/pair/0");
        const Point3 q = point_from_json(pair.at(1), pointer + "/pair/1");
        try {
            return to_analytic(Circle(p, q));
        } catch (const DegeneratePair& e) {
            throw ConfigError(pointer + "/pair", e.what());
        }
    }
    if (!j.is_object() || !j.contains("center") || !j.contains("radius_sq") ||
        !j.contains("normal"))
        throw ConfigError(pointer, "expected a circle object (pair or center/radius_sq/normal)");
    const json& n = j.at("normal");
    if (!n.is_array() || n.size() != 3)
        throw ConfigError(pointer + "/normal", "expected three rational strings");
    AnalyticCircle c{point_from_json(j.at("center"), pointer + "/center"),
                     rat_from_json(j.at("radius_sq"), pointer + "/radius_sq"),
                     Vec3{rat_from_json(n.at(0), pointer + "/normal/0"),
                          rat_from_json(n.at(1), pointer + "/normal/1"),
                          rat_from_json(n.at(2), pointer + "/normal/2")}};
    if (is_zero(c.normal)) throw ConfigError(pointer + "/normal", "normal must be nonzero");
    if (c.radius_sq <= 0) throw ConfigError(pointer + "/radius_sq", "radius_sq must be positive");
    return c;
}

json points_file(const std::vector<Point3>& points) {
    json arr = json::array();
    for (const Point3& p : points) arr.push_back(point_to_json(p));
    return json{{"points", std::move(arr)}};
}

std::vector<Point3> points_from_file(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.at("points").is_array())
        throw ConfigError("/points", "expected an object with a points array");
    std::vector<Point3> out;
    const json& arr = j.at("points");
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(point_from_json(arr.at(i), "/points/" + std::to_string(i)));
    return out;
}

json circles_file(const std::vector<AnalyticCircle>& circles) {
    json arr = json::array();
    for (const AnalyticCircle& c : circles) arr.push_back(circle_to_json(c));
    return json{{"circles", std::move(arr)}};
}

std::vector<AnalyticCircle> circles_from_file(const json& j) {
    if (!j.is_object() || !j.contains("circles") || !j.at("circles").is_array())
        throw ConfigError("/circles", "expected an object with a circles array");
    std::vector<AnalyticCircle> out;
    const json& arr = j.at("circles");
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(circle_from_json(arr.at(i), "/circles/" + std::to_string(i)));
    return out;
}

json cutset_to_json(const CutSet& cutset) {
    json arr = json::array();
    for (const CutCircle& cc : cutset.circles) {
        json cuts = json::array();
        for (const AlgebraicPoint3& p : cc.cuts) cuts.push_back(alg_point_to_json(p));
        arr.push_back(json{{"circle_id", cc.circle_id},
                           {"circle", circle_to_json(cc.circle)},
                           {"cuts", std::move(cuts)},
                           {"arcs", cc.arc_count()}});
    }
    return json{{"cut_circles", std::move(arr)}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("/", "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("/", std::string("parse error in ") + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ConfigError("/", "cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace udlab
