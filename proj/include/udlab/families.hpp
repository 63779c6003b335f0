#pragma once

#include "udlab/geometry.hpp"
#include "udlab/rng.hpp"

#include <cstdint>
#include <vector>

namespace udlab {

/**
 * The lattice A x A x B with A = {0, 1/b, ..., 3} and B = {0, 1/b^2, ..., 9};
 * |P| = (3b+1)^2 (9b^2+1). Every point of the middle region (all three
 * coordinates in [1, 2]) has at least b^2 unit partners in the d* metric.
 */
std::vector<Point3> gen_example1(unsigned b);

bool in_example1_middle_region(const Point3& p);

// ---------------------------------------------------------------------------

/**
 * Pencil of k circles through the base points (0, 0, +-h): unit-sphere
 * centers are rational points of the locus circle {|c|^2 = 1 - h^2, c3 = 0},
 * sampled by the tangent-half-angle parametrization scaled by the rational
 * radius; circles come from k disjoint center pairs. Requires 0 < h < 1 and
 * 1 - h^2 a perfect rational square (NonRationalLocus otherwise; the default
 * h = 3/5 gives radius 4/5).
 */
struct PencilFamily {
    Point3 base_plus, base_minus;
    std::vector<Circle> circles;
};

PencilFamily gen_pencil(const Rational& h, std::size_t k, std::uint64_t seed);

// ---------------------------------------------------------------------------

/**
 * The sphere-to-circle reduction on a cell partition: for every cell and
 * every intra-cell pair p, q of centers with 0 < |p-q| < 2, the circle
 * C_{p,q} = S_p cap S_q joins the family. The reduction's counting identity
 * is exact at this level: the number of triples (intra-cell pair, center r
 * with r on both unit spheres) equals I(Q, C0), and both sides are computed
 * through independent predicates.
 */
struct PipelineResult {
    std::vector<AnalyticCircle> circles;  // C0, one entry per eligible pair
    std::vector<std::size_t> eligible_pairs_per_cell;
    std::uint64_t direct_triples = 0;     // via unit-sphere membership
    std::uint64_t circle_incidences = 0;  // via circle membership
};

PipelineResult gen_sphere_circle_pipeline(const std::vector<Point3>& centers,
                                          const std::vector<std::size_t>& cell_assignment);

// Axis-aligned unit-grid cells as a stand-in partition; returns dense ids.
std::vector<std::size_t> grid_cell_assignment(const std::vector<Point3>& points);

// ---------------------------------------------------------------------------

// n pairwise distinct circles in the plane x3 = 0, seeded.
std::vector<AnalyticCircle> gen_coplanar_family(std::size_t n, std::uint64_t seed);

/**
 * Seeded random circles and points with bounded rational coordinates.
 * Denominators are drawn from the divisors of 720720 that stay within the
 * bound, so whole datasets keep a small common denominator and the scaled
 * integer counting path stays available.
 */
struct RandomConfig {
    std::vector<AnalyticCircle> circles;
    std::vector<Point3> points;
};

RandomConfig gen_random_config(std::size_t n_circles, std::size_t m_points, std::uint64_t seed,
                               long denominator_bound = 1000);

// Seeded rational point cloud (points only).
std::vector<Point3> gen_random_points(std::size_t count, std::uint64_t seed,
                                      long denominator_bound = 1000);

// Integer lattice cube with `per_axis` points per axis.
std::vector<Point3> gen_grid_points(std::size_t per_axis);

// ---------------------------------------------------------------------------

// Seeded rotation making every circle's plane non-vertical (normal.x3 != 0);
// retries random rational rotations until the exact predicate holds.
Rotation find_generic_rotation(const std::vector<AnalyticCircle>& circles, SplitMix64& rng);

std::vector<AnalyticCircle> apply_rotation(const Rotation& rot,
                                           const std::vector<AnalyticCircle>& circles);
std::vector<Point3> apply_rotation(const Rotation& rot, const std::vector<Point3>& points);

}  // namespace udlab
