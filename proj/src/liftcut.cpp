#include "udlab/liftcut.hpp"

#include "udlab/errors.hpp"

#include <algorithm>

namespace udlab {

QuadExt PlaneQuadratic::eval(const QuadExt& x1, const QuadExt& x2) const {
    return QuadExt(a) * x1 * x1 + QuadExt(b) * x1 * x2 + QuadExt(c) * x2 * x2 + QuadExt(d) * x1 +
           QuadExt(e) * x2 + QuadExt(f);
}

QuadExt PlaneQuadratic::d_x1(const QuadExt& x1, const QuadExt& x2) const {
    return QuadExt(2 * a) * x1 + QuadExt(b) * x2 + QuadExt(d);
}

QuadExt PlaneQuadratic::d_x2(const QuadExt& x1, const QuadExt& x2) const {
    return QuadExt(b) * x1 + QuadExt(2 * c) * x2 + QuadExt(e);
}

PlaneQuadratic project_implicitize(const AnalyticCircle& circ) {
    if (circ.normal.x3 == 0)
        throw VerticalCircle("projection of a vertical circle is a segment, not an ellipse");
    // Solve the plane for x3 = p x1 + q x2 + w + center.x3 and substitute into
    // |x - center|^2 = r^2.
    const Rational p = -circ.normal.x1 / circ.normal.x3;
    const Rational q = -circ.normal.x2 / circ.normal.x3;
    const Rational offset = dot(circ.normal, circ.center);
    const Rational w = (offset - circ.normal.x3 * circ.center.x3) / circ.normal.x3;
    const Rational o1 = circ.center.x1, o2 = circ.center.x2;
    PlaneQuadratic f{};
    f.a = 1 + p * p;
    f.b = 2 * p * q;
    f.c = 1 + q * q;
    f.d = -2 * o1 + 2 * p * w;
    f.e = -2 * o2 + 2 * q * w;
    f.f = o1 * o1 + o2 * o2 + w * w - circ.radius_sq;
    return f;
}

QuadExt lift_slope(const PlaneQuadratic& f, const QuadExt& x1, const QuadExt& x2) {
    const QuadExt denom = f.d_x1(x1, x2);
    if (quad_sign(denom) == 0)
        throw PoleAtExtremal("d_x1 f vanishes; the lift has a vertical fiber here");
    return f.d_x2(x1, x2) / denom;
}

std::vector<AlgebraicPoint3> x2_extremal_points(const PlaneQuadratic& f,
                                                const AnalyticCircle& c) {
    if (c.normal.x3 == 0) throw VerticalCircle("extremal points need an ellipse projection");
    // Intersect the line 2A x1 + B x2 + D = 0 with the conic. For an ellipse
    // A >= 1, so the line solves for x1.
    const Rational b1 = -f.b / (2 * f.a);
    const Rational b0 = -f.d / (2 * f.a);
    const Rational qa = f.a * b1 * b1 + f.b * b1 + f.c;
    const Rational qb = 2 * f.a * b1 * b0 + f.b * b0 + f.d * b1 + f.e;
    const Rational qc = f.a * b0 * b0 + f.d * b0 + f.f;
    std::vector<QuadExt> roots;
    if (qa == 0) {
        if (qb != 0) roots.emplace_back(Rational(-qc / qb));
    } else {
        const Rational disc = qb * qb - 4 * qa * qc;
        if (disc == 0) {
            roots.emplace_back(Rational(-qb / (2 * qa)));
        } else if (disc > 0) {
            roots.emplace_back(-qb / (2 * qa), Rational(1) / (2 * qa), disc);
            roots.emplace_back(-qb / (2 * qa), Rational(-1) / (2 * qa), disc);
        }
    }
    // Lift back to the circle through its plane.
    const Rational offset = dot(c.normal, c.center);
    std::vector<AlgebraicPoint3> out;
    for (const QuadExt& x2 : roots) {
        const QuadExt x1 = QuadExt(b1) * x2 + QuadExt(b0);
        const QuadExt x3 = (QuadExt(offset) - QuadExt(c.normal.x1) * x1 -
                            QuadExt(c.normal.x2) * x2) /
                           QuadExt(c.normal.x3);
        out.push_back(AlgebraicPoint3{x1, x2, x3});
    }
    return out;
}

// ---------------------------------------------------------------------------

std::optional<LensPoints> detect_lens(const AnalyticCircle& c1, const AnalyticCircle& c2) {
    CircleIntersection x = circle_circle_intersection(c1, c2);
    if (x.coincident) throw CoincidentInput("lens detection on coincident circles");
    if (x.points.size() != 2) return std::nullopt;
    return LensPoints{x.points[0], x.points[1]};
}

DepthCycleKind depth_cycle_check(const AnalyticCircle& c1, const AnalyticCircle& c2,
                                 const LensPoints& lens) {
    const PlaneQuadratic f1 = project_implicitize(c1);
    const PlaneQuadratic f2 = project_implicitize(c2);
    const int at_first = quad_compare(lift_slope(f1, lens.first.x1, lens.first.x2),
                                      lift_slope(f2, lens.first.x1, lens.first.x2));
    const int at_second = quad_compare(lift_slope(f1, lens.second.x1, lens.second.x2),
                                       lift_slope(f2, lens.second.x1, lens.second.x2));
    if (at_first * at_second < 0) return DepthCycleKind::Proper;
    if (at_first == 0 && at_second == 0) return DepthCycleKind::Improper;
    if (at_first == 0 || at_second == 0) return DepthCycleKind::Proper;
    return DepthCycleKind::NoCycle;
}

// ---------------------------------------------------------------------------

std::size_t CutSet::total_arcs() const {
    std::size_t n = 0;
    for (const CutCircle& c : circles) n += c.arc_count();
    return n;
}

std::size_t CutSet::total_cuts() const {
    std::size_t n = 0;
    for (const CutCircle& c : circles) n += c.cuts.size();
    return n;
}

namespace {

// Index of the arc containing `pt`, or nullopt when `pt` is a cut point. Arc
// k is the open cyclic segment (cuts[k], cuts[k+1 mod m]).
std::optional<std::size_t> arc_containing(const CircleFrame& frame, const CutCircle& cc,
                                          const AlgebraicPoint3& pt) {
    const std::size_t m = cc.cuts.size();
    for (const AlgebraicPoint3& cut : cc.cuts)
        if (frame.angle_eq(cut, pt)) return std::nullopt;
    // First cut strictly after pt in angular order.
    std::size_t lo = 0, hi = m;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (frame.angle_less(pt, cc.cuts[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return (lo + m - 1) % m;
}

bool same_arc(const CircleFrame& frame, const CutCircle& cc, const AlgebraicPoint3& x,
              const AlgebraicPoint3& y) {
    const auto ax = arc_containing(frame, cc, x);
    if (!ax) return false;
    const auto ay = arc_containing(frame, cc, y);
    return ay && *ax == *ay;
}

}  // namespace

CuttingResult cut_to_pseudosegments(const std::vector<AnalyticCircle>& circles) {
    const std::size_t n = circles.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (circles[i].normal.x3 == 0)
            throw VerticalCircle("circle " + std::to_string(i) +
                                 " is vertical; rotate the configuration first");
        for (std::size_t j = i + 1; j < n; ++j)
            if (same_circle(circles[i], circles[j]))
                throw CoincidentInput("circles " + std::to_string(i) + " and " +
                                      std::to_string(j) + " coincide");
    }

    CuttingResult result;
    result.cutset.circles.reserve(n);
    std::vector<CircleFrame> frames;
    frames.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        CutCircle cc{i, circles[i], {}};
        cc.cuts = x2_extremal_points(project_implicitize(circles[i]), circles[i]);
        frames.emplace_back(circles[i]);
        std::sort(cc.cuts.begin(), cc.cuts.end(),
                  [&](const AlgebraicPoint3& a, const AlgebraicPoint3& b) {
                      return frames.back().angle_less(a, b);
                  });
        result.cut_count += cc.cuts.size();
        result.cutset.circles.push_back(std::move(cc));
    }

    // Cache the two-point intersections once.
    struct PairLens {
        std::size_t i, j;
        LensPoints lens;
    };
    std::vector<PairLens> lenses;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (auto lens = detect_lens(circles[i], circles[j]))
                lenses.push_back(PairLens{i, j, *lens});

    bool changed = true;
    while (changed) {
        changed = false;
        for (const PairLens& pl : lenses) {
            CutCircle& a = result.cutset.circles[pl.i];
            CutCircle& b = result.cutset.circles[pl.j];
            if (!same_arc(frames[pl.i], a, pl.lens.first, pl.lens.second)) continue;
            if (!same_arc(frames[pl.j], b, pl.lens.first, pl.lens.second)) continue;
            // Cut the larger circle id at the lexicographically smaller point.
            const AlgebraicPoint3& pt =
                alg_lex_less(pl.lens.first, pl.lens.second) ? pl.lens.first : pl.lens.second;
            auto where = std::lower_bound(b.cuts.begin(), b.cuts.end(), pt,
                                          [&](const AlgebraicPoint3& u, const AlgebraicPoint3& v) {
                                              return frames[pl.j].angle_less(u, v);
                                          });
            b.cuts.insert(where, pt);
            ++result.cut_count;
            changed = true;
        }
    }
    return result;
}

VerifyResult verify_pseudosegments(const CutSet& cutset) {
    VerifyResult out;
    const std::size_t n = cutset.circles.size();
    std::vector<CircleFrame> frames;
    frames.reserve(n);
    for (const CutCircle& cc : cutset.circles) frames.emplace_back(cc.circle);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            CircleIntersection x =
                circle_circle_intersection(cutset.circles[i].circle, cutset.circles[j].circle);
            if (x.points.size() != 2) continue;
            if (same_arc(frames[i], cutset.circles[i], x.points[0], x.points[1]) &&
                same_arc(frames[j], cutset.circles[j], x.points[0], x.points[1])) {
                out.ok = false;
                out.witness =
                    PseudosegmentWitness{cutset.circles[i].circle_id,
                                         cutset.circles[j].circle_id, x.points[0], x.points[1]};
                return out;
            }
        }
    return out;
}

}  // namespace udlab
