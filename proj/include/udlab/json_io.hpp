#pragma once

#include "udlab/geometry.hpp"
#include "udlab/liftcut.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace udlab {

using nlohmann::json;

// All rationals cross the JSON boundary as strings ("3/4", "-2"), never as
// floating-point numbers.

json rat_to_json(const Rational& q);
Rational rat_from_json(const json& j, const std::string& pointer);

json point_to_json(const Point3& p);
Point3 point_from_json(const json& j, const std::string& pointer);

json quad_to_json(const QuadExt& q);
json alg_point_to_json(const AlgebraicPoint3& p);

// Circles serialize either as {"pair": [pt, pt]} (unit-sphere pair form) or
// as {"center": pt, "radius_sq": "r", "normal": ["n1","n2","n3"]}; the reader
// accepts both.
json circle_to_json(const AnalyticCircle& c);
json circle_to_json(const Circle& c);
AnalyticCircle circle_from_json(const json& j, const std::string& pointer);

json points_file(const std::vector<Point3>& points);
std::vector<Point3> points_from_file(const json& j);

json circles_file(const std::vector<AnalyticCircle>& circles);
std::vector<AnalyticCircle> circles_from_file(const json& j);

json cutset_to_json(const CutSet& cutset);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace udlab
