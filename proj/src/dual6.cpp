#include "udlab/dual6.hpp"

#include "udlab/errors.hpp"

namespace udlab {

bool duality_check(const Point3& q, const Point3& p, const Point3& pprime) {
    // Left side through the circle's derived plane/center/radius form, right
    // side through raw unit-sphere membership; the duality says they agree.
    const Circle circle(p, pprime);  // throws DegeneratePair when not a circle
    const bool on_circle = dot(circle.plane_normal(), q) == circle.plane_offset() &&
                           norm2(q - circle.center()) == circle.radius_sq();
    const bool in_double_sphere = double_sphere_contains(q, DualPoint6{p, pprime});
    return on_circle == in_double_sphere;
}

namespace {

// Two independent rational vectors orthogonal to n (n nonzero).
std::pair<Vec3, Vec3> orthogonal_pair(const Vec3& n) {
    const Vec3 axes[3] = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    Vec3 c1;
    for (const Vec3& axis : axes) {
        c1 = cross(n, axis);
        if (!is_zero(c1)) break;
    }
    return {c1, cross(n, c1)};
}

std::array<Rational, 6> stack6(const Vec3& u, const Vec3& v) {
    return {u.x1, u.x2, u.x3, v.x1, v.x2, v.x3};
}

}  // namespace

TangentBasis tangent_basis(const Point3& q, const DualPoint6& w) {
    if (!double_sphere_contains(q, w))
        throw NotOnVariety("w is not on the double-sphere of q");
    const Vec3 n1 = w.p - q;
    const Vec3 n2 = w.pprime - q;
    const auto [u1, u2] = orthogonal_pair(n1);
    const auto [v1, v2] = orthogonal_pair(n2);
    TangentBasis out{w, q, {}};
    out.basis[0] = stack6(u1, Vec3{0, 0, 0});
    out.basis[1] = stack6(u2, Vec3{0, 0, 0});
    out.basis[2] = stack6(Vec3{0, 0, 0}, v1);
    out.basis[3] = stack6(Vec3{0, 0, 0}, v2);
    return out;
}

std::size_t span_rank(const std::vector<TangentBasis>& bases) {
    if (bases.empty()) return 0;
    const DualPoint6& w = bases.front().w;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        if (!(bases[i].w.p == w.p && bases[i].w.pprime == w.pprime))
            throw MixedBasepoints("tangent bases taken at different witnesses");
        for (std::size_t j = i + 1; j < bases.size(); ++j)
            if (bases[i].q == bases[j].q)
                throw MixedBasepoints("tangent bases must have pairwise distinct centers");
    }
    RatMatrix stacked(0, 6);
    for (const TangentBasis& b : bases)
        for (const auto& row : b.basis)
            stacked.append_row(std::vector<Rational>(row.begin(), row.end()));
    return stacked.rank();
}

std::size_t pair_intersection_dim(const TangentBasis& b1, const TangentBasis& b2) {
    return 8 - span_rank({b1, b2});
}

WitnessConfig random_witness_config(SplitMix64& rng, std::size_t num_centers) {
    auto small_rational = [&rng]() { return Rational(rng.range(-6, 6), rng.range(1, 6)); };
    for (int attempt = 0; attempt < 64; ++attempt) {
        const Point3 q1{small_rational(), small_rational(), small_rational()};
        const Point3 a = rational_sphere_point(small_rational(), small_rational(), q1);
        const Point3 b = rational_sphere_point(small_rational(), small_rational(), q1);
        const Rational ab2 = norm2(a - b);
        if (!(ab2 > 0 && ab2 < 4)) continue;
        // Centers at distance 1 from both a and b form the circle C_{ab},
        // which passes through q1: chords of rational direction through q1
        // land on rational points.
        const Point3 locus_center = Rational(1, 2) * (a + b);
        const auto [e1, e2] = orthogonal_pair(b - a);
        WitnessConfig config{DualPoint6{a, b}, {q1}};
        int guard = 0;
        while (config.centers.size() < num_centers && guard++ < 1000) {
            const Rational t = small_rational();
            const Vec3 d = e1 + t * e2;
            const Rational chord = -2 * dot(d, q1 - locus_center) / norm2(d);
            if (chord == 0) continue;
            const Point3 c = q1 + chord * d;
            bool fresh = true;
            for (const Point3& seen : config.centers) fresh = fresh && !(seen == c);
            if (fresh) config.centers.push_back(c);
        }
        if (config.centers.size() == num_centers) return config;
    }
    throw std::logic_error("witness configuration generation failed to converge");
}

}  // namespace udlab
