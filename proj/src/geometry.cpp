#include "udlab/geometry.hpp"

#include "udlab/errors.hpp"

#include <stdexcept>

namespace udlab {

Rational dot(const Vec3& a, const Vec3& b) { return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}

Rational norm2(const Vec3& a) { return dot(a, a); }

bool lex_less(const Point3& p, const Point3& q) {
    if (p.x1 != q.x1) return p.x1 < q.x1;
    if (p.x2 != q.x2) return p.x2 < q.x2;
    return p.x3 < q.x3;
}

bool is_zero(const Vec3& a) { return a.x1 == 0 && a.x2 == 0 && a.x3 == 0; }

// ---------------------------------------------------------------------------

Circle::Circle(const Point3& p, const Point3& pprime) {
    if (p == pprime) throw DegeneratePair("coincident unit-sphere centers");
    if (lex_less(p, pprime)) {
        p_ = p;
        pprime_ = pprime;
    } else {
        p_ = pprime;
        pprime_ = p;
    }
    const Vec3 diff = pprime_ - p_;
    const Rational d2 = norm2(diff);
    if (!(d2 > 0 && d2 < 4))
        throw DegeneratePair("unit spheres at squared distance " + rat_to_string(d2) +
                             " do not meet in a circle");
    plane_normal_ = diff;
    plane_offset_ = (norm2(pprime_) - norm2(p_)) / 2;
    center_ = Rational(1, 2) * (p_ + pprime_);
    radius_sq_ = 1 - d2 / 4;
}

AnalyticCircle to_analytic(const Circle& c) {
    return AnalyticCircle{c.center(), c.radius_sq(), c.plane_normal()};
}

bool same_circle(const AnalyticCircle& a, const AnalyticCircle& b) {
    return is_zero(cross(a.normal, b.normal)) && a.center == b.center &&
           a.radius_sq == b.radius_sq;
}

Point3 AlgebraicPoint3::to_point3() const {
    return Point3{x1.as_rational(), x2.as_rational(), x3.as_rational()};
}

AlgebraicPoint3 to_algebraic(const Point3& p) {
    return AlgebraicPoint3{QuadExt(p.x1), QuadExt(p.x2), QuadExt(p.x3)};
}

bool alg_lex_less(const AlgebraicPoint3& a, const AlgebraicPoint3& b) {
    int c = quad_compare(a.x1, b.x1);
    if (c != 0) return c < 0;
    c = quad_compare(a.x2, b.x2);
    if (c != 0) return c < 0;
    return quad_compare(a.x3, b.x3) < 0;
}

bool circle_contains(const AnalyticCircle& c, const AlgebraicPoint3& q) {
    const QuadExt on_plane = QuadExt(c.normal.x1) * q.x1 + QuadExt(c.normal.x2) * q.x2 +
                             QuadExt(c.normal.x3) * q.x3 - QuadExt(dot(c.normal, c.center));
    if (quad_sign(on_plane) != 0) return false;
    const QuadExt dx = q.x1 - QuadExt(c.center.x1);
    const QuadExt dy = q.x2 - QuadExt(c.center.x2);
    const QuadExt dz = q.x3 - QuadExt(c.center.x3);
    return quad_sign(dx * dx + dy * dy + dz * dz - QuadExt(c.radius_sq)) == 0;
}

// ---------------------------------------------------------------------------

SpherePairIntersection sphere_pair_to_circle(const Point3& p, const Point3& pprime) {
    if (p == pprime) throw DegeneratePair("coincident unit-sphere centers");
    const Rational d2 = norm2(pprime - p);
    SpherePairIntersection out{};
    if (d2 > 4) {
        out.kind = SpherePairIntersection::Kind::Empty;
    } else if (d2 == 4) {
        out.kind = SpherePairIntersection::Kind::TangentPoint;
        out.tangent_point = Rational(1, 2) * (p + pprime);
    } else {
        out.kind = SpherePairIntersection::Kind::Circle;
        out.circle = Circle(p, pprime);
    }
    return out;
}

Point3 rational_sphere_point(const Rational& u, const Rational& v, const Point3& q) {
    const Rational w = u * u + v * v;
    const Rational denom = w + 1;
    return q + Point3{2 * u / denom, 2 * v / denom, (w - 1) / denom};
}

// ---------------------------------------------------------------------------

Point3 invert_point(const Point3& c, const Point3& x) {
    if (x == c) throw CenterOnObject("inversion center is the point itself");
    const Rational d2 = norm2(x - c);
    return c + (Rational(1) / d2) * (x - c);
}

SphereOrPlane invert_sphere(const Point3& c, const Sphere& s) {
    SphereOrPlane out{};
    const Vec3 oc = s.center - c;
    const Rational power = norm2(oc) - s.radius_sq;  // power of c w.r.t. s
    if (power == 0) {
        // Sphere through the center maps to the plane (o-c).(x-c) = 1/2.
        out.kind = SphereOrPlane::Kind::Plane;
        out.plane = Plane{oc, dot(oc, c) + Rational(1, 2)};
    } else {
        out.kind = SphereOrPlane::Kind::Sphere;
        out.sphere =
            Sphere{c + (Rational(1) / power) * oc, s.radius_sq / (power * power)};
    }
    return out;
}

SphereOrPlane invert_plane(const Point3& c, const Plane& p) {
    SphereOrPlane out{};
    const Rational h = p.offset - dot(p.normal, c);
    if (h == 0) {
        out.kind = SphereOrPlane::Kind::Plane;
        out.plane = p;  // a plane through the center is fixed as a set
    } else {
        out.kind = SphereOrPlane::Kind::Sphere;
        out.sphere =
            Sphere{c + (Rational(1) / (2 * h)) * p.normal, norm2(p.normal) / (4 * h * h)};
    }
    return out;
}

std::optional<AnalyticCircle> circle_from_sphere_plane(const Sphere& s, const Plane& p) {
    const Rational n2 = norm2(p.normal);
    const Rational h = p.offset - dot(p.normal, s.center);
    const Rational r2 = s.radius_sq - h * h / n2;
    if (r2 <= 0) return std::nullopt;
    return AnalyticCircle{s.center + (h / n2) * p.normal, r2, p.normal};
}

std::optional<AnalyticCircle> circle_from_two_spheres(const Sphere& a, const Sphere& b) {
    if (a.center == b.center) return std::nullopt;
    // Radical plane: |x-a|^2 - ra^2 = |x-b|^2 - rb^2.
    const Plane radical{2 * (b.center - a.center),
                        norm2(b.center) - norm2(a.center) - b.radius_sq + a.radius_sq};
    return circle_from_sphere_plane(a, radical);
}

AnalyticCircle invert_circle(const Point3& c, const AnalyticCircle& circ) {
    if (circ.contains(c)) throw CenterOnObject("inversion center lies on the circle");
    const Plane pl = circ.plane();
    // Carrier sphere from the pencil through the circle; at most one member
    // of the pencil passes through c, so the second try always lands.
    Sphere carrier{circ.center, circ.radius_sq};
    if (carrier.contains(c))
        carrier = Sphere{circ.center + circ.normal, circ.radius_sq + norm2(circ.normal)};
    const SphereOrPlane img_carrier = invert_sphere(c, carrier);
    if (img_carrier.kind != SphereOrPlane::Kind::Sphere)
        throw std::logic_error("carrier sphere unexpectedly passes through the center");
    if (pl.contains(c)) {
        auto img = circle_from_sphere_plane(*img_carrier.sphere, pl);
        if (!img) throw std::logic_error("inversion image degenerated");
        return *img;
    }
    const SphereOrPlane img_plane = invert_plane(c, pl);
    auto img = circle_from_two_spheres(*img_plane.sphere, *img_carrier.sphere);
    if (!img) throw std::logic_error("inversion image degenerated");
    return *img;
}

// ---------------------------------------------------------------------------

namespace {

// Rational point on both planes: zero out a coordinate whose line-direction
// component is nonzero and solve the remaining 2x2 (its determinant is that
// component, up to sign).
Point3 point_on_both_planes(const Plane& p1, const Plane& p2, const Vec3& direction) {
    const Rational n1[3] = {p1.normal.x1, p1.normal.x2, p1.normal.x3};
    const Rational n2[3] = {p2.normal.x1, p2.normal.x2, p2.normal.x3};
    const Rational d[3] = {direction.x1, direction.x2, direction.x3};
    int k = d[0] != 0 ? 0 : (d[1] != 0 ? 1 : 2);
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    const Rational det = n1[i] * n2[j] - n1[j] * n2[i];
    const Rational xi = (p1.offset * n2[j] - p2.offset * n1[j]) / det;
    const Rational xj = (n1[i] * p2.offset - n2[i] * p1.offset) / det;
    Rational coords[3];
    coords[k] = 0;
    coords[i] = xi;
    coords[j] = xj;
    return Point3{coords[0], coords[1], coords[2]};
}

}  // namespace

CircleIntersection circle_circle_intersection(const AnalyticCircle& c1,
                                              const AnalyticCircle& c2) {
    CircleIntersection out{};
    if (same_circle(c1, c2)) {
        out.coincident = true;
        return out;
    }
    const Plane p1 = c1.plane();
    Plane p2;
    if (!is_zero(cross(c1.normal, c2.normal))) {
        p2 = c2.plane();
    } else {
        // Parallel planes: distinct ones cannot meet; for coplanar circles the
        // radical plane supplies the second cutting plane.
        if (!p1.contains(c2.center)) return out;
        if (c1.center == c2.center) return out;  // concentric, distinct radii
        p2 = Plane{2 * (c2.center - c1.center), norm2(c2.center) - norm2(c1.center) -
                                                    c2.radius_sq + c1.radius_sq};
    }
    const Vec3 d = cross(p1.normal, p2.normal);
    const Point3 q0 = point_on_both_planes(p1, p2, d);
    // |q0 + t d - center|^2 = r^2 as a rational quadratic in t.
    const Vec3 w = q0 - c1.center;
    const Rational A = norm2(d);
    const Rational B = 2 * dot(d, w);
    const Rational C = norm2(w) - c1.radius_sq;
    const Rational disc = B * B - 4 * A * C;
    if (disc < 0) return out;
    std::vector<QuadExt> roots;
    if (disc == 0) {
        roots.emplace_back(Rational(-B / (2 * A)));
    } else {
        roots.emplace_back(-B / (2 * A), Rational(1) / (2 * A), disc);
        roots.emplace_back(-B / (2 * A), Rational(-1) / (2 * A), disc);
    }
    for (const QuadExt& t : roots) {
        AlgebraicPoint3 x{QuadExt(q0.x1) + t * QuadExt(d.x1),
                          QuadExt(q0.x2) + t * QuadExt(d.x2),
                          QuadExt(q0.x3) + t * QuadExt(d.x3)};
        const QuadExt dx = x.x1 - QuadExt(c2.center.x1);
        const QuadExt dy = x.x2 - QuadExt(c2.center.x2);
        const QuadExt dz = x.x3 - QuadExt(c2.center.x3);
        if (quad_sign(dx * dx + dy * dy + dz * dz - QuadExt(c2.radius_sq)) == 0)
            out.points.push_back(std::move(x));
    }
    return out;
}

// ---------------------------------------------------------------------------

Point3 Rotation::apply(const Point3& p) const {
    return Point3{m[0][0] * p.x1 + m[0][1] * p.x2 + m[0][2] * p.x3,
                  m[1][0] * p.x1 + m[1][1] * p.x2 + m[1][2] * p.x3,
                  m[2][0] * p.x1 + m[2][1] * p.x2 + m[2][2] * p.x3};
}

AnalyticCircle Rotation::apply(const AnalyticCircle& c) const {
    return AnalyticCircle{apply(c.center), c.radius_sq, apply(c.normal)};
}

namespace {

Rotation axis_rotation(int axis, const Rational& t) {
    const Rational denom = 1 + t * t;
    const Rational c = (1 - t * t) / denom;
    const Rational s = 2 * t / denom;
    Rotation r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = (i == j) ? 1 : 0;
    const int i = (axis + 1) % 3, j = (axis + 2) % 3;
    r.m[i][i] = c;
    r.m[i][j] = -s;
    r.m[j][i] = s;
    r.m[j][j] = c;
    return r;
}

Rotation compose(const Rotation& a, const Rotation& b) {
    Rotation r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational acc = 0;
            for (int k = 0; k < 3; ++k) acc += a.m[i][k] * b.m[k][j];
            r.m[i][j] = acc;
        }
    return r;
}

}  // namespace

Rotation rational_rotation(const Rational& t1, const Rational& t2, const Rational& t3) {
    return compose(axis_rotation(2, t3), compose(axis_rotation(1, t2), axis_rotation(0, t1)));
}

Rotation random_rotation(SplitMix64& rng) {
    auto small_t = [&rng]() {
        Rational t(rng.range(1, 9), rng.range(10, 19));
        return rng.below(2) ? t : Rational(-t);
    };
    return rational_rotation(small_t(), small_t(), small_t());
}

// ---------------------------------------------------------------------------

CircleFrame::CircleFrame(const AnalyticCircle& c) : center_(c.center) {
    const Vec3 axes[3] = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    for (const Vec3& axis : axes) {
        e1_ = cross(c.normal, axis);
        if (!is_zero(e1_)) break;
    }
    e2_ = cross(c.normal, e1_);
}

CircleFrame::Key CircleFrame::key_of(const AlgebraicPoint3& p) const {
    const QuadExt dx = p.x1 - QuadExt(center_.x1);
    const QuadExt dy = p.x2 - QuadExt(center_.x2);
    const QuadExt dz = p.x3 - QuadExt(center_.x3);
    const QuadExt u = dx * QuadExt(e1_.x1) + dy * QuadExt(e1_.x2) + dz * QuadExt(e1_.x3);
    const QuadExt v = dx * QuadExt(e2_.x1) + dy * QuadExt(e2_.x2) + dz * QuadExt(e2_.x3);
    const int su = quad_sign(u), sv = quad_sign(v);
    if (su == 0 && sv == 0)
        throw std::logic_error("point coincides with the circle center");
    static constexpr int quadrant_of[3][3] = {
        // su: -1, 0, +1 (rows), sv: -1, 0, +1 (cols)
        {5, 4, 3},
        {6, -1, 2},
        {7, 0, 1},
    };
    Key key{};
    key.quadrant = quadrant_of[su + 1][sv + 1];
    key.has_slope = (su != 0);
    if (key.has_slope) key.slope = v / u;  // increasing in angle inside each open quadrant
    return key;
}

bool CircleFrame::angle_less(const AlgebraicPoint3& p, const AlgebraicPoint3& q) const {
    const Key a = key_of(p), b = key_of(q);
    if (a.quadrant != b.quadrant) return a.quadrant < b.quadrant;
    if (!a.has_slope) return false;  // axis quadrants hold a single circle point
    return quad_compare(a.slope, b.slope) < 0;
}

bool CircleFrame::angle_eq(const AlgebraicPoint3& p, const AlgebraicPoint3& q) const {
    const Key a = key_of(p), b = key_of(q);
    if (a.quadrant != b.quadrant) return false;
    if (!a.has_slope) return true;
    return quad_compare(a.slope, b.slope) == 0;
}

}  // namespace udlab
