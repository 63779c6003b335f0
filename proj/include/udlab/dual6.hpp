#pragma once

#include "udlab/geometry.hpp"
#include "udlab/rat_matrix.hpp"
#include "udlab/rng.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace udlab {

/**
 * The R^6 dual picture: a circle C_{pp'} is the point (p, p') in R^3 x R^3,
 * and a point q becomes the double-sphere Z_q = S_q x S_q. The duality is
 * q in C_{pp'} iff (p, p') in Z_q, and the tangent-space lemmas about sums
 * and intersections of T_w Z_q reduce to exact ranks of stacked bases.
 */
struct DualPoint6 {
    Point3 p, pprime;
};

struct DoubleSphere {
    Point3 q;

    bool contains(const DualPoint6& w) const {
        return norm2(w.p - q) == 1 && norm2(w.pprime - q) == 1;
    }
};

inline bool double_sphere_contains(const Point3& q, const DualPoint6& w) {
    return DoubleSphere{q}.contains(w);
}

// Whether [q in C_{pp'}] and [(p,p') in Z_q] agree; the lemma says this is
// always true, and the implementation evaluates the two sides through
// different code paths. Throws DegeneratePair when (p, p') is not a circle.
bool duality_check(const Point3& q, const Point3& p, const Point3& pprime);

/**
 * Rational basis of the tangent 4-flat T_w Z_q = {(u, v) : u.(a-q) = 0,
 * v.(b-q) = 0} at w = (a, b) in Z_q.
 */
struct TangentBasis {
    DualPoint6 w;
    Point3 q;
    std::array<std::array<Rational, 6>, 4> basis;
};

// Throws NotOnVariety when w is not on Z_q.
TangentBasis tangent_basis(const Point3& q, const DualPoint6& w);

// Exact rank of the stacked bases; all bases must share the same w and have
// pairwise distinct centers (MixedBasepoints otherwise). For any three
// distinct centers the answer is 6.
std::size_t span_rank(const std::vector<TangentBasis>& bases);

// dim(T_w Z_{q1} cap T_w Z_{q2}) = 8 - span rank; always even.
std::size_t pair_intersection_dim(const TangentBasis& b1, const TangentBasis& b2);

/**
 * Seeded configurations with exact shared witnesses: w = (a, b) is drawn on
 * S_{q1} x S_{q1}, and further centers are rational points of the circle
 * {|c-a| = 1, |c-b| = 1} (which q1 itself lies on, so the circle has a
 * rational parametrization through it).
 */
struct WitnessConfig {
    DualPoint6 w;
    std::vector<Point3> centers;  // pairwise distinct, all containing w in Z_q
};

WitnessConfig random_witness_config(SplitMix64& rng, std::size_t num_centers);

}  // namespace udlab
