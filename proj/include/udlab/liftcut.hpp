#pragma once

#include "udlab/geometry.hpp"
#include "udlab/quadext.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace udlab {

/**
 * Conic A x1^2 + B x1 x2 + C x2^2 + D x1 + E x2 + F obtained by eliminating
 * x3 from a circle's sphere/plane pair; vanishes exactly on the vertical
 * projection of the circle. For non-vertical circle planes the conic is an
 * ellipse (B^2 - 4AC = -4(1 + p^2 + q^2) < 0), hence square-free.
 */
struct PlaneQuadratic {
    Rational a, b, c, d, e, f;

    QuadExt eval(const QuadExt& x1, const QuadExt& x2) const;
    QuadExt d_x1(const QuadExt& x1, const QuadExt& x2) const;  // 2A x1 + B x2 + D
    QuadExt d_x2(const QuadExt& x1, const QuadExt& x2) const;  // B x1 + 2C x2 + E
};

// Implicitization of the projection; throws VerticalCircle when the circle's
// plane is vertical (normal.x3 == 0) — callers pre-rotate instead.
PlaneQuadratic project_implicitize(const AnalyticCircle& c);

/**
 * Fourth coordinate of the lift: x4 solves x4 * d_x1 f = d_x2 f at the point.
 * Throws PoleAtExtremal where d_x1 f vanishes (the lift has a vertical-line
 * fiber there; cutting always excises those points).
 */
QuadExt lift_slope(const PlaneQuadratic& f, const QuadExt& x1, const QuadExt& x2);

// The <= 2 points of the circle whose projection has d_x1 f = 0 (tangent
// parallel to the x1-axis); exactly the poles of lift_slope, lifted back to
// the circle through its plane.
std::vector<AlgebraicPoint3> x2_extremal_points(const PlaneQuadratic& f,
                                                const AnalyticCircle& c);

// ---------------------------------------------------------------------------
// Lenses and depth cycles

struct LensPoints {
    AlgebraicPoint3 first, second;
};

// Two-point intersections only; one-point, empty and same-plane-disjoint
// intersections give nullopt, coincident circles throw CoincidentInput.
std::optional<LensPoints> detect_lens(const AnalyticCircle& c1, const AnalyticCircle& c2);

enum class DepthCycleKind { Proper, Improper, NoCycle };

// Compares the lifted x4 slopes of the two circles at both lens points, all
// by exact sign computations in one quadratic extension per point. A swap in
// the order with at least one strict inequality is a proper depth cycle.
DepthCycleKind depth_cycle_check(const AnalyticCircle& c1, const AnalyticCircle& c2,
                                 const LensPoints& lens);

// ---------------------------------------------------------------------------
// Cuttings

/**
 * A circle with its exact cut points, kept sorted in the circle's cyclic
 * angular order. The arcs are the open segments between consecutive cut
 * points (wrapping), so a circle with m >= 2 cut points carries m arcs and
 * the cut points themselves belong to no arc.
 */
struct CutCircle {
    std::size_t circle_id = 0;
    AnalyticCircle circle;
    std::vector<AlgebraicPoint3> cuts;

    std::size_t arc_count() const { return cuts.size(); }
};

struct CutSet {
    std::vector<CutCircle> circles;

    std::size_t total_arcs() const;
    std::size_t total_cuts() const;
};

struct CuttingResult {
    CutSet cutset;
    std::size_t cut_count = 0;
};

/**
 * Cuts every circle at its two x2-extremal points, then removes lenses
 * greedily: while some pair of arcs shares two points, the arc of the larger
 * circle id is cut at the lexicographically smaller shared point. The rule is
 * deterministic and terminates (cut lists only grow, and a pair once cut at a
 * shared point can never violate again). Requires pairwise non-coincident,
 * non-vertical circles.
 */
CuttingResult cut_to_pseudosegments(const std::vector<AnalyticCircle>& circles);

struct PseudosegmentWitness {
    std::size_t circle_a = 0, circle_b = 0;
    AlgebraicPoint3 x, y;
};

struct VerifyResult {
    bool ok = true;
    std::optional<PseudosegmentWitness> witness;
};

// True iff no two arcs share two points: for every circle pair meeting twice,
// no arc of either circle may contain both intersection points while the
// other does too. Recomputes all intersections from scratch.
VerifyResult verify_pseudosegments(const CutSet& cutset);

}  // namespace udlab
