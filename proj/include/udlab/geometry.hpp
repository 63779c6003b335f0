#pragma once

#include "udlab/quadext.hpp"
#include "udlab/rational.hpp"
#include "udlab/rng.hpp"

#include <array>
#include <optional>
#include <vector>

namespace udlab {

/** Rational point (or vector) in R^3; equality is coordinate-wise and exact. */
struct Point3 {
    Rational x1, x2, x3;

    Point3() : x1(0), x2(0), x3(0) {}
    Point3(Rational a, Rational b, Rational c)
        : x1(std::move(a)), x2(std::move(b)), x3(std::move(c)) {}

    friend Point3 operator+(const Point3& p, const Point3& q) {
        return {p.x1 + q.x1, p.x2 + q.x2, p.x3 + q.x3};
    }
    friend Point3 operator-(const Point3& p, const Point3& q) {
        return {p.x1 - q.x1, p.x2 - q.x2, p.x3 - q.x3};
    }
    friend Point3 operator*(const Rational& c, const Point3& p) {
        return {c * p.x1, c * p.x2, c * p.x3};
    }
    friend bool operator==(const Point3& p, const Point3& q) {
        return p.x1 == q.x1 && p.x2 == q.x2 && p.x3 == q.x3;
    }
    friend bool operator!=(const Point3& p, const Point3& q) { return !(p == q); }
};

using Vec3 = Point3;

Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Rational norm2(const Vec3& a);
bool lex_less(const Point3& p, const Point3& q);
bool is_zero(const Vec3& a);

/** Plane {x : normal . x = offset}, normal nonzero rational, unnormalized. */
struct Plane {
    Vec3 normal;
    Rational offset;

    bool contains(const Point3& p) const { return dot(normal, p) == offset; }
};

/** Sphere with exact center and squared radius. */
struct Sphere {
    Point3 center;
    Rational radius_sq;

    bool contains(const Point3& p) const { return norm2(p - center) == radius_sq; }
};

/** Unit sphere S_p identified by its center; |q - p|^2 = 1 membership. */
struct UnitSphere {
    Point3 center;

    bool contains(const Point3& q) const { return norm2(q - center) == 1; }
};

/**
 * Circle arising as the intersection of two unit spheres, stored in the
 * canonical pair form (p lexicographically smaller than p'). The derived
 * analytic fields are populated exactly from the pair:
 *   plane: (p'-p) . x = (|p'|^2 - |p|^2)/2,  center (p+p')/2,
 *   radius_sq = 1 - |p'-p|^2/4.
 */
class Circle {
  public:
    Circle(const Point3& p, const Point3& pprime);

    const Point3& first_center() const { return p_; }
    const Point3& second_center() const { return pprime_; }
    const Vec3& plane_normal() const { return plane_normal_; }
    const Rational& plane_offset() const { return plane_offset_; }
    const Point3& center() const { return center_; }
    const Rational& radius_sq() const { return radius_sq_; }

    // q lies on the circle iff it is on both unit spheres.
    bool contains(const Point3& q) const {
        return norm2(q - p_) == 1 && norm2(q - pprime_) == 1;
    }

    friend bool operator==(const Circle& a, const Circle& b) {
        return a.p_ == b.p_ && a.pprime_ == b.pprime_;
    }

  private:
    Point3 p_, pprime_;
    Vec3 plane_normal_;
    Rational plane_offset_;
    Point3 center_;
    Rational radius_sq_;
};

/**
 * Circle in general position: exact in-plane center, squared radius, and an
 * unnormalized rational plane normal. Covers circles that do not come from
 * unit-sphere pairs (inversion images, generated families).
 */
struct AnalyticCircle {
    Point3 center;
    Rational radius_sq;
    Vec3 normal;

    Plane plane() const { return Plane{normal, dot(normal, center)}; }

    bool contains(const Point3& q) const {
        return dot(normal, q) == dot(normal, center) && norm2(q - center) == radius_sq;
    }
};

AnalyticCircle to_analytic(const Circle& c);

// Set equality (parallel normals, same center, same squared radius).
bool same_circle(const AnalyticCircle& a, const AnalyticCircle& b);

/** Point with coordinates in one real quadratic extension. */
struct AlgebraicPoint3 {
    QuadExt x1, x2, x3;

    bool is_rational() const {
        return x1.is_rational() && x2.is_rational() && x3.is_rational();
    }
    Point3 to_point3() const;  // throws InvalidRadicand when irrational

    friend bool operator==(const AlgebraicPoint3& a, const AlgebraicPoint3& b) {
        return quad_eq(a.x1, b.x1) && quad_eq(a.x2, b.x2) && quad_eq(a.x3, b.x3);
    }
};

AlgebraicPoint3 to_algebraic(const Point3& p);
bool alg_lex_less(const AlgebraicPoint3& a, const AlgebraicPoint3& b);

// Exact membership of an algebraic point on an analytic circle.
bool circle_contains(const AnalyticCircle& c, const AlgebraicPoint3& q);

// ---------------------------------------------------------------------------
// Sphere pairs

struct SpherePairIntersection {
    enum class Kind { Circle, TangentPoint, Empty };
    Kind kind;
    std::optional<Circle> circle;         // Kind::Circle
    std::optional<Point3> tangent_point;  // Kind::TangentPoint
};

// Intersection of the unit spheres around p and p'. Circle when
// 0 < |p-p'|^2 < 4, tangent midpoint at exactly 4, empty beyond; p == p'
// throws DegeneratePair (the intersection would be a whole sphere).
SpherePairIntersection sphere_pair_to_circle(const Point3& p, const Point3& pprime);

// Rational point on the unit sphere around q:
//   q + (2u, 2v, u^2+v^2-1) / (u^2+v^2+1).
Point3 rational_sphere_point(const Rational& u, const Rational& v, const Point3& q);

// ---------------------------------------------------------------------------
// Inversion around center c (unit inversion sphere), exact in all parameters.

struct SphereOrPlane {
    enum class Kind { Sphere, Plane };
    Kind kind;
    std::optional<Sphere> sphere;
    std::optional<Plane> plane;
};

Point3 invert_point(const Point3& c, const Point3& x);
SphereOrPlane invert_sphere(const Point3& c, const Sphere& s);
SphereOrPlane invert_plane(const Point3& c, const Plane& p);
// Object-class-preserving image; throws CenterOnObject when c lies on the
// circle (the image would be a line).
AnalyticCircle invert_circle(const Point3& c, const AnalyticCircle& circ);

// ---------------------------------------------------------------------------
// Circle construction helpers

// Circle cut out of a sphere by a plane; nullopt when they miss or touch.
std::optional<AnalyticCircle> circle_from_sphere_plane(const Sphere& s, const Plane& p);
// Intersection circle of two distinct spheres, via the radical plane.
std::optional<AnalyticCircle> circle_from_two_spheres(const Sphere& a, const Sphere& b);

// ---------------------------------------------------------------------------
// Circle-circle intersection

struct CircleIntersection {
    bool coincident = false;
    // 0, 1, or 2 common points, coordinates in one quadratic extension.
    std::vector<AlgebraicPoint3> points;
};

CircleIntersection circle_circle_intersection(const AnalyticCircle& c1,
                                              const AnalyticCircle& c2);

// ---------------------------------------------------------------------------
// Exact rotations

/** Orthogonal 3x3 rational matrix (det +1), built from Pythagorean triples. */
struct Rotation {
    std::array<std::array<Rational, 3>, 3> m;

    Point3 apply(const Point3& p) const;
    AnalyticCircle apply(const AnalyticCircle& c) const;
};

// Composition Rz(t3) Ry(t2) Rx(t1) of tangent-half-angle rotations, each with
// cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2); exact for rational t.
Rotation rational_rotation(const Rational& t1, const Rational& t2, const Rational& t3);
// Seeded rotation with small random rational parameters.
Rotation random_rotation(SplitMix64& rng);

// ---------------------------------------------------------------------------
// Angular order of points on a circle (used for exact arc bookkeeping).

/**
 * Exact cyclic-order key for points of one fixed circle: an in-plane rational
 * frame (e1, e2 = n x e1) assigns each point the pair (u, v) of frame dot
 * products; points are ordered by quadrant of (u, v) and, inside a quadrant,
 * by the slope v/u. Both live in the point's own extension, so comparisons
 * across different radicands go through quad_compare.
 */
class CircleFrame {
  public:
    explicit CircleFrame(const AnalyticCircle& c);

    // Total order on circle points by angle; exact.
    bool angle_less(const AlgebraicPoint3& p, const AlgebraicPoint3& q) const;
    bool angle_eq(const AlgebraicPoint3& p, const AlgebraicPoint3& q) const;

  private:
    struct Key {
        int quadrant;  // 0..7 walking counterclockwise from the +e1 axis
        bool has_slope;
        QuadExt slope;
    };
    Key key_of(const AlgebraicPoint3& p) const;

    Point3 center_;
    Vec3 e1_, e2_;
};

}  // namespace udlab
