#pragma once

#include "udlab/geometry.hpp"
#include "udlab/kernels.hpp"
#include "udlab/metric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace udlab {

/**
 * Exact unit-pair counting. Counts are of unordered pairs {x, y} with metric
 * value exactly 1 (the ordered convention is twice that; reports that quote
 * per-point guarantees print both).
 *
 * The brute-force counter enumerates every pair and is the oracle; the grid
 * counter buckets points into axis-aligned cells of side 1 and scans the
 * 27-cell neighborhood, which is exhaustive for both metrics because every
 * unit ball fits in a 2x2x2 box. Both decide the unit condition exactly: in
 * scaled int64 arithmetic when the dataset has a small common denominator,
 * in arbitrary-precision rationals otherwise.
 */
std::uint64_t count_unit_pairs_bruteforce(const std::vector<Point3>& points, Metric metric);
std::uint64_t count_unit_pairs_grid(const std::vector<Point3>& points, Metric metric);

// Number of unit-distance partners of each point (ordered convention).
std::vector<std::uint32_t> unit_partner_counts(const std::vector<Point3>& points, Metric metric);

// Thread budget used by the grid counter: LAB_THREADS when set, else the
// hardware count. Results are integer sums and independent of the budget.
unsigned effective_thread_count();

// ---------------------------------------------------------------------------
// Point-circle incidences

struct IncidenceReport {
    std::uint64_t count = 0;
    // (point index, circle index) pairs, retained when requested.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::uint64_t> per_circle;
};

IncidenceReport incidences_points_circles(const std::vector<Point3>& points,
                                          const std::vector<AnalyticCircle>& circles,
                                          bool keep_pairs = false);

// All points lying on at least two of the circles, exactly deduplicated.
// Throws CoincidentInput when two circles coincide as sets.
std::vector<AlgebraicPoint3> two_rich_points(const std::vector<AnalyticCircle>& circles);

// ---------------------------------------------------------------------------
// Sphere degeneracy

struct RichestCircleResult {
    AnalyticCircle circle;
    std::size_t count = 0;
};

// Circle of the sphere carrying the most points of `on_sphere` (all points
// must satisfy the sphere equation exactly; at least 3 points required, the
// maximum over <=2-point circles being trivially min(|P|, 2)).
RichestCircleResult richest_circle_on_sphere(const Sphere& sphere,
                                             const std::vector<Point3>& on_sphere);

// ---------------------------------------------------------------------------
// Circle-family degeneracy

/**
 * Largest number of circles of the family lying in one common plane or one
 * common sphere, found exactly: coplanar groups by canonical plane, and for
 * every non-coplanar pair the at-most-one common sphere through both (its
 * center must sit on both axes) collects members. Returns at least 1 for a
 * nonempty family.
 */
std::size_t max_circles_common_plane_or_sphere(const std::vector<AnalyticCircle>& circles);

// ---------------------------------------------------------------------------
// Bound formulas (informational; constants 1, epsilon 0). These are the one
// place the library evaluates in floating point, because the formulas have
// irrational values; nothing exact depends on them.

struct BoundCheckReport {
    // formula name -> (value, observed/value)
    std::map<std::string, std::pair<double, double>> entries;
};

BoundCheckReport bound_checker(double m, double n, double degeneracy, double pseudo_segments,
                               double observed);

double bound_gk_pseudosegments(double m, double n, double B, double N);
double bound_point_circle_r3(double m, double n, double q);
double bound_aks_point_circle(double m, double n);
double bound_rich_spheres(double m, double k);
double bound_kst(double m, double n, double s, double t);

}  // namespace udlab
