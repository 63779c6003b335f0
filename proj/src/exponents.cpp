#include "udlab/exponents.hpp"

#include "udlab/errors.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>

namespace udlab {

namespace {

Rational R(long num, long den = 1) { return Rational(num, den); }

std::vector<ExponentTerm> build_table() {
    std::vector<ExponentTerm> t;
    auto add = [&t](const char* label, Rational c0, Rational ca, Rational cb, Rational cd,
                    Rational cab, Rational cad) {
        t.push_back(ExponentTerm{label, std::move(c0), std::move(ca), std::move(cb),
                                 std::move(cd), std::move(cab), std::move(cad)});
    };
    //    label                     c0          ca         cb          cd         cab        cad
    add("spheresToCircles-1", R(1), R(0), R(2), R(0), R(0), R(0));
    add("spheresToCircles-2", R(2), R(0), R(-3), R(0), R(0), R(0));
    add("contribDegenerate", R(1), R(1), R(0), R(0), R(0), R(0));
    add("caseA1", R(65, 44), R(0), R(0), R(0), R(0), R(0));
    add("caseA2-1", R(114, 55), R(4, 55), R(-27, 11), R(0), R(0), R(0));
    add("caseA2-2", R(28, 15), R(1, 5), R(-2), R(0), R(0), R(0));
    add("caseA2-3", R(4, 5), R(4, 5), R(0), R(0), R(0), R(0));
    add("caseA2-4", R(2), R(0), R(-3), R(0), R(0), R(0));
    add("contribDegenerateB-1", R(2), R(0), R(-3), R(0), R(0), R(0));
    add("contribDegenerateB-2", R(6, 11), R(18, 11), R(0), R(54, 11), R(-27, 11), R(-54, 11));
    add("contribDegenerateB-3", R(2, 3), R(4, 3), R(0), R(14, 3), R(-2), R(-4));
    add("contribDegenerateB-4", R(1), R(0), R(0), R(4), R(0), R(0));
    add("contribDegenerateB-5", R(0), R(2), R(0), R(6), R(-3), R(-6));
    add("caseB1-1", R(24, 11), R(-8, 11), R(-27, 11), R(0), R(12, 11), R(24, 11));
    add("caseB1-2", R(2), R(-2, 3), R(-2), R(2, 3), R(1), R(2));
    add("caseB1-3", R(1), R(0), R(0), R(4), R(0), R(0));
    add("caseB1-4", R(2), R(0), R(-3), R(0), R(0), R(0));
    add("caseB2-1", R(114, 55), R(8, 55), R(-27, 11), R(12, 55), R(-12, 55), R(-24, 55));
    add("caseB2-2", R(28, 15), R(2, 5), R(-2), R(14, 15), R(-3, 5), R(-6, 5));
    add("caseB2-3", R(4, 5), R(8, 5), R(0), R(22, 5), R(-12, 5), R(-24, 5));
    add("caseB2-4", R(2), R(0), R(-3), R(0), R(0), R(0));
    add("caseC-1", R(2), R(0), R(-9, 4), R(1, 2), R(0), R(0));
    add("caseC-2", R(2), R(-2, 3), R(-2), R(2, 3), R(1), R(2));
    add("caseC-3", R(1), R(0), R(0), R(4), R(0), R(0));
    add("caseC-4", R(8, 3), R(0), R(-4), R(-2), R(0), R(0));
    add("caseC-5", R(3), R(-1), R(-9, 2), R(-3), R(3, 2), R(3));
    return t;
}

}  // namespace

const std::vector<ExponentTerm>& term_table() {
    static const std::vector<ExponentTerm> table = build_table();
    return table;
}

Evaluation evaluate_all(const Rational& alpha, const Rational& beta, const Rational& delta) {
    const auto& table = term_table();
    Evaluation out;
    out.values.reserve(table.size());
    for (const ExponentTerm& term : table) out.values.push_back(term.eval(alpha, beta, delta));
    out.max = out.values.front();
    for (const Rational& v : out.values)
        if (v > out.max) out.max = v;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        if (out.values[i] == out.max) out.argmax.push_back(i);
    return out;
}

namespace {

// Half-space a . (beta, delta, t) >= rhs.
struct HalfSpace {
    std::array<Rational, 3> a;
    Rational rhs;
};

std::vector<HalfSpace> constraints_at(const Rational& alpha) {
    std::vector<HalfSpace> cs;
    for (const ExponentTerm& term : term_table())
        cs.push_back(HalfSpace{{-term.kb(alpha), -term.kd(alpha), Rational(1)}, term.k0(alpha)});
    cs.push_back(HalfSpace{{Rational(1), Rational(0), Rational(0)}, Rational(0)});        // b >= 0
    cs.push_back(HalfSpace{{Rational(-1), Rational(0), Rational(0)}, Rational(-1, 3)});   // b <= 1/3
    cs.push_back(HalfSpace{{Rational(0), Rational(1), Rational(0)}, Rational(0)});        // d >= 0
    cs.push_back(HalfSpace{{Rational(-1, 2), Rational(-1), Rational(0)}, Rational(-1, 3)});
    return cs;                                                          // d <= 1/3 - b/2
}

std::optional<std::array<Rational, 3>> solve_triple(const HalfSpace& h1, const HalfSpace& h2,
                                                    const HalfSpace& h3) {
    const std::array<const HalfSpace*, 3> h{&h1, &h2, &h3};
    // Cramer's rule on the 3x3 system of active constraints.
    auto det3 = [](const std::array<std::array<Rational, 3>, 3>& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    std::array<std::array<Rational, 3>, 3> m;
    for (int r = 0; r < 3; ++r) m[r] = h[r]->a;
    const Rational det = det3(m);
    if (det == 0) return std::nullopt;
    std::array<Rational, 3> x;
    for (int col = 0; col < 3; ++col) {
        std::array<std::array<Rational, 3>, 3> mc = m;
        for (int r = 0; r < 3; ++r) mc[r][col] = h[r]->rhs;
        x[col] = det3(mc) / det;
    }
    return x;
}

bool feasible(const std::vector<HalfSpace>& cs, const std::array<Rational, 3>& x) {
    for (const HalfSpace& h : cs)
        if (h.a[0] * x[0] + h.a[1] * x[1] + h.a[2] * x[2] < h.rhs) return false;
    return true;
}

// (t, beta, delta)-lexicographic order on candidate vertices.
bool vertex_better(const std::array<Rational, 3>& cand, const std::array<Rational, 3>& best) {
    if (cand[2] != best[2]) return cand[2] < best[2];
    if (cand[0] != best[0]) return cand[0] < best[0];
    return cand[1] < best[1];
}

}  // namespace

FixedAlphaSolution solve_fixed_alpha(const Rational& alpha) {
    if (alpha < 0 || alpha > Rational(1, 2))
        throw OutOfRange("alpha = " + rat_to_string(alpha) + " outside [0, 1/2]");
    const std::vector<HalfSpace> cs = constraints_at(alpha);
    const std::size_t n = cs.size();
    std::optional<std::array<Rational, 3>> best;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                auto x = solve_triple(cs[i], cs[j], cs[k]);
                if (!x || !feasible(cs, *x)) continue;
                if (!best || vertex_better(*x, *best)) best = x;
            }
    if (!best) throw std::logic_error("feasible region unexpectedly empty");
    return FixedAlphaSolution{(*best)[0], (*best)[1], (*best)[2]};
}

OptimumCertificate certify_alpha(const Rational& alpha) {
    const FixedAlphaSolution sol = solve_fixed_alpha(alpha);
    const Evaluation eval = evaluate_all(alpha, sol.beta, sol.delta);
    OptimumCertificate cert{alpha, sol.beta, sol.delta, sol.value, {}};
    for (std::size_t idx : eval.argmax) cert.tight_labels.push_back(term_table()[idx].label);
    return cert;
}

ScanResult scan_alpha(const Rational& grid_step) {
    if (grid_step <= 0) throw OutOfRange("grid step must be positive");
    ScanResult out;
    const Rational half(1, 2);
    for (Rational alpha = 0; alpha <= half; alpha += grid_step) {
        const FixedAlphaSolution sol = solve_fixed_alpha(alpha);
        out.curve.push_back(ScanPoint{alpha, sol.beta, sol.delta, sol.value});
    }
    out.best_index = 0;
    for (std::size_t i = 1; i < out.curve.size(); ++i)
        if (out.curve[i].value < out.curve[out.best_index].value) out.best_index = i;
    const Rational star(5, 17);
    const FixedAlphaSolution ref = solve_fixed_alpha(star);
    out.reference = ScanPoint{star, ref.beta, ref.delta, ref.value};
    out.reference_at_most_grid = true;
    for (const ScanPoint& p : out.curve)
        if (p.value < out.reference.value) out.reference_at_most_grid = false;
    return out;
}

TightnessReport tightness_report(const OptimumCertificate& cert) {
    if (cert.alpha != Rational(5, 17))
        throw OutOfRange("tightness report is defined for the certificate at alpha = 5/17");
    static const std::vector<std::string> expected_labels = {
        "spheresToCircles-1", "caseB1-1", "caseB1-2", "caseB2-1", "caseB2-2",
        "caseC-2",            "caseC-5"};

    const auto& table = term_table();
    auto find_term = [&table](const std::string& label) -> const ExponentTerm& {
        for (const ExponentTerm& t : table)
            if (t.label == label) return t;
        throw std::logic_error("unknown term label " + label);
    };
    // Deduplicate a label set by polynomial identity.
    auto distinct_polys = [&](const std::vector<std::string>& labels) {
        std::vector<const ExponentTerm*> polys;
        for (const std::string& label : labels) {
            const ExponentTerm& t = find_term(label);
            bool seen = false;
            for (const ExponentTerm* p : polys) seen = seen || p->same_polynomial(t);
            if (!seen) polys.push_back(&t);
        }
        return polys;
    };

    TightnessReport report;
    report.tight_labels = cert.tight_labels;
    const auto actual = distinct_polys(cert.tight_labels);
    const auto expected = distinct_polys(expected_labels);
    report.distinct_polynomials = actual.size();
    auto covers = [](const std::vector<const ExponentTerm*>& lhs,
                     const std::vector<const ExponentTerm*>& rhs) {
        for (const ExponentTerm* r : rhs) {
            bool found = false;
            for (const ExponentTerm* l : lhs) found = found || l->same_polynomial(*r);
            if (!found) return false;
        }
        return true;
    };
    report.matches_expected = covers(actual, expected) && covers(expected, actual);
    if (!report.matches_expected)
        throw TightSetMismatch("tight set at the optimum differs from the published list");
    return report;
}

}  // namespace udlab
