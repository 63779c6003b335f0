#pragma once

#include "udlab/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace udlab {

/**
 * One row of the exponent table: the affine-in-(beta, delta), bilinear-in-
 * alpha expression
 *     c0 + ca*alpha + cb*beta + cd*delta + cab*(alpha*beta) + cad*(alpha*delta).
 * The label records which analysis case the row came from; duplicate
 * polynomials (the row 2 - 3*beta appears five times) keep distinct labels.
 */
struct ExponentTerm {
    std::string label;
    Rational c0, ca, cb, cd, cab, cad;

    Rational eval(const Rational& alpha, const Rational& beta, const Rational& delta) const {
        return c0 + ca * alpha + cb * beta + cd * delta + cab * alpha * beta +
               cad * alpha * delta;
    }

    // Affine coefficients in (beta, delta) once alpha is fixed.
    Rational k0(const Rational& alpha) const { return c0 + ca * alpha; }
    Rational kb(const Rational& alpha) const { return cb + cab * alpha; }
    Rational kd(const Rational& alpha) const { return cd + cad * alpha; }

    bool same_polynomial(const ExponentTerm& other) const {
        return c0 == other.c0 && ca == other.ca && cb == other.cb && cd == other.cd &&
               cab == other.cab && cad == other.cad;
    }
};

// The full 26-row table.
const std::vector<ExponentTerm>& term_table();

// ---------------------------------------------------------------------------

struct Evaluation {
    std::vector<Rational> values;      // one per table row
    Rational max;
    std::vector<std::size_t> argmax;   // indices of rows attaining max
};

Evaluation evaluate_all(const Rational& alpha, const Rational& beta, const Rational& delta);

/**
 * Exact minimizer of max-over-rows at fixed alpha, as the LP
 *     minimize t  s.t.  t >= row(alpha; beta, delta) for every row,
 *                       0 <= beta <= 1/3,  0 <= delta <= 1/3 - beta/2,
 * solved by enumerating all constraint triples, filtering by feasibility and
 * taking the (t, beta, delta)-lexicographically smallest vertex. Throws
 * OutOfRange unless 0 <= alpha <= 1/2.
 */
struct FixedAlphaSolution {
    Rational beta, delta, value;
};

FixedAlphaSolution solve_fixed_alpha(const Rational& alpha);

struct OptimumCertificate {
    Rational alpha, beta, delta, value;
    std::vector<std::string> tight_labels;  // rows equal to value, exactly
};

// solve_fixed_alpha plus the exact tight set at the optimum.
OptimumCertificate certify_alpha(const Rational& alpha);

// ---------------------------------------------------------------------------

struct ScanPoint {
    Rational alpha, beta, delta, value;
};

struct ScanResult {
    std::vector<ScanPoint> curve;   // grid points of [0, 1/2]
    std::size_t best_index = 0;     // smallest value, ties to smaller alpha
    ScanPoint reference;            // the certified point alpha = 5/17
    bool reference_at_most_grid = false;
};

ScanResult scan_alpha(const Rational& grid_step);

// ---------------------------------------------------------------------------

/**
 * Tight-set check at the published optimum: the rows attaining the max at
 * certify_alpha(5/17) must be, up to duplicate polynomials, exactly
 *   spheresToCircles-1, caseB1-1, caseB1-2, caseB2-1, caseB2-2,
 *   caseC-2 (the same polynomial as caseB1-2) and caseC-5.
 * Throws TightSetMismatch when they are not; OutOfRange when the certificate
 * is not at alpha = 5/17.
 */
struct TightnessReport {
    std::vector<std::string> tight_labels;
    std::size_t distinct_polynomials = 0;
    bool matches_expected = false;
};

TightnessReport tightness_report(const OptimumCertificate& cert);

}  // namespace udlab
