#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// the LP oracle enumerates vertices through Gaussian elimination instead of
// the library's Cramer route, and the degeneracy oracle rebuilds each circle
// from circumcenters instead of reusing plane shortcuts.

#include "udlab/counting.hpp"
#include "udlab/exponents.hpp"
#include "udlab/geometry.hpp"
#include "udlab/rat_matrix.hpp"

#include <array>
#include <optional>
#include <vector>

namespace udlab::testsupport {

// All-vertex enumeration for the fixed-alpha min-max LP; skip_term drops one
// table row (monotonicity checks). Returns (beta, delta, value).
inline std::optional<std::array<Rational, 3>> lp_oracle(const Rational& alpha,
                                                        int skip_term = -1) {
    std::vector<std::array<Rational, 4>> rows;  // a1 b + a2 d + a3 t >= a4
    int index = 0;
    for (const ExponentTerm& term : term_table()) {
        if (index++ == skip_term) continue;
        rows.push_back({-(term.cb + term.cab * alpha), -(term.cd + term.cad * alpha),
                        Rational(1), term.c0 + term.ca * alpha});
    }
    rows.push_back({Rational(1), Rational(0), Rational(0), Rational(0)});
    rows.push_back({Rational(-1), Rational(0), Rational(0), Rational(-1, 3)});
    rows.push_back({Rational(0), Rational(1), Rational(0), Rational(0)});
    rows.push_back({Rational(-1, 2), Rational(-1), Rational(0), Rational(-1, 3)});

    std::optional<std::array<Rational, 3>> best;
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                RatMatrix m(3, 3);
                std::vector<Rational> rhs(3);
                const std::size_t pick[3] = {i, j, k};
                for (int r = 0; r < 3; ++r) {
                    for (int c = 0; c < 3; ++c) m.at(r, c) = rows[pick[r]][c];
                    rhs[r] = rows[pick[r]][3];
                }
                const auto x = m.solve(rhs);
                if (!x) continue;
                bool ok = true;
                for (const auto& row : rows)
                    ok = ok &&
                         (row[0] * (*x)[0] + row[1] * (*x)[1] + row[2] * (*x)[2] >= row[3]);
                if (!ok) continue;
                const std::array<Rational, 3> cand{(*x)[0], (*x)[1], (*x)[2]};
                auto better = [](const std::array<Rational, 3>& a,
                                 const std::array<Rational, 3>& b) {
                    if (a[2] != b[2]) return a[2] < b[2];
                    if (a[0] != b[0]) return a[0] < b[0];
                    return a[1] < b[1];
                };
                if (!best || better(cand, *best)) best = cand;
            }
    return best;
}

// Triple-enumeration degeneracy oracle: circumcenter from perpendicular
// bisector planes, membership through the distance equation.
inline std::size_t richest_circle_oracle(const Sphere& sphere,
                                         const std::vector<Point3>& pts) {
    std::size_t best = 0;
    const std::size_t m = pts.size();
    (void)sphere;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c) {
                const Vec3 n = cross(pts[b] - pts[a], pts[c] - pts[a]);
                if (is_zero(n)) continue;
                RatMatrix sys(3, 3);
                std::vector<Rational> rhs(3);
                const Vec3 d1 = pts[b] - pts[a], d2 = pts[c] - pts[a];
                sys.at(0, 0) = d1.x1;
                sys.at(0, 1) = d1.x2;
                sys.at(0, 2) = d1.x3;
                rhs[0] = (norm2(pts[b]) - norm2(pts[a])) / 2;
                sys.at(1, 0) = d2.x1;
                sys.at(1, 1) = d2.x2;
                sys.at(1, 2) = d2.x3;
                rhs[1] = (norm2(pts[c]) - norm2(pts[a])) / 2;
                sys.at(2, 0) = n.x1;
                sys.at(2, 1) = n.x2;
                sys.at(2, 2) = n.x3;
                rhs[2] = dot(n, pts[a]);
                const auto center = sys.solve(rhs);
                if (!center) continue;
                const Point3 o{(*center)[0], (*center)[1], (*center)[2]};
                const Rational r2 = norm2(pts[a] - o);
                std::size_t hits = 0;
                for (const Point3& p : pts)
                    hits += (norm2(p - o) == r2 && dot(n, p) == dot(n, pts[a]));
                best = std::max(best, hits);
            }
    return best;
}

}  // namespace udlab::testsupport
