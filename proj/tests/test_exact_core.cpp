#include "udlab/errors.hpp"
#include "udlab/quadext.hpp"
#include "udlab/rat_matrix.hpp"
#include "udlab/rational.hpp"
#include "udlab/rng.hpp"

#include <doctest.h>

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <vector>

using namespace udlab;

namespace {

Rational random_rational(SplitMix64& rng, long span = 30, long max_den = 12) {
    return Rational(rng.range(-span, span), rng.range(1, max_den));
}

// High-precision float rendering, used as an independent probabilistic oracle
// for sign/order decisions on sampled values (never inside the library).
using BigFloat = boost::multiprecision::mpfr_float_100;

BigFloat approx_rat(const Rational& q) {
    return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

BigFloat approx(const QuadExt& x) {
    return approx_rat(x.rational_part()) +
           approx_rat(x.radical_coeff()) * sqrt(approx_rat(x.radicand()));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational p = random_rational(rng), q = random_rational(rng),
                       r = random_rational(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(denominator(p + q) > 0);
        CHECK(boost::multiprecision::gcd(numerator(p + q), denominator(p + q)) == 1);
    }
}

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(Rational(3, 4)) == "3/4");
    CHECK(rat_to_string(Rational(-6, 8)) == "-3/4");
    CHECK(rat_to_string(Rational(5)) == "5");
    CHECK(*rat_from_string("7/2") == Rational(7, 2));
    CHECK(*rat_from_string("-9") == Rational(-9));
    CHECK(!rat_from_string("1/0/2"));
    CHECK(!rat_from_string("a/b"));
    CHECK(!rat_from_string(""));
    CHECK(!rat_from_string("1.5"));
    SplitMix64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational q = random_rational(rng, 1000, 997);
        CHECK(*rat_from_string(rat_to_string(q)) == q);
    }
}

TEST_CASE("exact square roots") {
    CHECK(*exact_sqrt(Rational(49, 64)) == Rational(7, 8));
    CHECK(*exact_sqrt(Rational(0)) == 0);
    CHECK(!exact_sqrt(Rational(3, 4)));
    CHECK(!exact_sqrt(Rational(-1)));
}

TEST_CASE("quad_sign decides the published cases") {
    CHECK(quad_sign(QuadExt(1, 1, 2)) == 1);
    CHECK(quad_sign(QuadExt(0, 0, 7)) == 0);
    CHECK(quad_sign(QuadExt(-3, 0, 5)) == -1);
    // Opposite-sign branches need the squaring comparison.
    CHECK(quad_sign(QuadExt(-1, 1, 2)) == 1);    // sqrt(2) > 1
    CHECK(quad_sign(QuadExt(2, -1, 2)) == 1);    // 2 > sqrt(2)
    CHECK(quad_sign(QuadExt(1, -1, 2)) == -1);   // 1 < sqrt(2)
    CHECK(quad_sign(QuadExt(-3, 2, Rational(9, 4))) == 0);  // -3 + 2*sqrt(9/4) = 0
    CHECK_THROWS_AS(QuadExt(1, 1, -2), InvalidRadicand);
}

TEST_CASE("quad_compare matches the published orderings") {
    CHECK(quad_compare(QuadExt(1, 1, 2), QuadExt(2, 0, 2)) > 0);
    CHECK(quad_compare(QuadExt(3, 0, 5), QuadExt(3, 0, 7)) == 0);
    CHECK(quad_compare(QuadExt(0, 1, 2), QuadExt(0, 1, 3)) < 0);
}

TEST_CASE("quad_compare is radicand-agnostic") {
    CHECK(quad_compare(QuadExt(0, 1, 8), QuadExt(0, 2, 2)) == 0);
    CHECK(quad_compare(QuadExt(1, 1, 50), QuadExt(1, 5, 2)) == 0);
    CHECK(quad_compare(QuadExt(0, 1, Rational(1, 2)), QuadExt(0, Rational(1, 2), 2)) == 0);
}

TEST_CASE("quad_compare agrees with a 100-digit float oracle on random values") {
    SplitMix64 rng(13);
    const long radicands[] = {2, 3, 5, 6, 7, 10};
    for (int trial = 0; trial < 400; ++trial) {
        const QuadExt x(random_rational(rng), random_rational(rng),
                        Rational(radicands[rng.below(6)]));
        const QuadExt y(random_rational(rng), random_rational(rng),
                        Rational(radicands[rng.below(6)]));
        const BigFloat gap = approx(x) - approx(y);
        const int expected = gap > 1e-60 ? 1 : (gap < -1e-60 ? -1 : 0);
        CHECK(quad_compare(x, y) == expected);
        CHECK(quad_compare(y, x) == -quad_compare(x, y));
    }
}

TEST_CASE("quad_sign antisymmetry and transitivity inside one extension") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational s(rng.range(2, 40));
        const QuadExt x(random_rational(rng), random_rational(rng), s);
        const QuadExt y(random_rational(rng), random_rational(rng), s);
        const QuadExt z(random_rational(rng), random_rational(rng), s);
        const int sx = quad_sign(x);
        CHECK(sx * quad_sign(-x) <= 0);
        if (quad_compare(x, y) <= 0 && quad_compare(y, z) <= 0)
            CHECK(quad_compare(x, z) <= 0);
    }
}

TEST_CASE("quadratic extension arithmetic") {
    const QuadExt root2(0, 1, 2);
    CHECK(quad_eq((QuadExt(1) + root2) * (QuadExt(1) - root2), QuadExt(-1)));
    const QuadExt x(Rational(3, 2), Rational(-5, 7), 3);
    const QuadExt y(Rational(1, 4), Rational(2, 3), 3);
    CHECK(quad_eq((x / y) * y, x));
    CHECK_THROWS_AS(root2 * QuadExt(0, 1, 3), InvalidRadicand);
    CHECK_THROWS_AS(QuadExt(1) / QuadExt(0), std::domain_error);
}

TEST_CASE("quadext serialization") {
    CHECK(QuadExt(Rational(1, 2), Rational(3, 4), 5).str() == "1/2+3/4*sqrt(5)");
    CHECK(QuadExt(Rational(1, 2), Rational(-3, 4), 5).str() == "1/2-3/4*sqrt(5)");
    CHECK(QuadExt(Rational(-7, 3)).str() == "-7/3");
    CHECK(QuadExt(2, 1, 9).str() == "5");  // perfect square folds away
}

// ---------------------------------------------------------------------------

namespace {

// Independent rank oracle: largest r with a nonzero r x r minor.
Rational minor_det(const RatMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    Rational acc = 0;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t c = 0; c < n; ++c)
            if (c != k) sub_cols.push_back(cols[c]);
        acc += sign * m.at(rows[0], cols[k]) * minor_det(m, sub_rows, sub_cols);
        sign = -sign;
    }
    return acc;
}

bool has_nonzero_minor(const RatMatrix& m, std::size_t r, std::vector<std::size_t> rows,
                       std::vector<std::size_t> cols, std::size_t row_from, std::size_t col_from) {
    if (rows.size() == r && cols.size() == r) return minor_det(m, rows, cols) != 0;
    if (rows.size() < r) {
        for (std::size_t i = row_from; i + (r - rows.size()) <= m.rows(); ++i) {
            rows.push_back(i);
            if (has_nonzero_minor(m, r, rows, cols, i + 1, col_from)) return true;
            rows.pop_back();
        }
        return false;
    }
    for (std::size_t j = col_from; j + (r - cols.size()) <= m.cols(); ++j) {
        cols.push_back(j);
        if (has_nonzero_minor(m, r, rows, cols, row_from, j + 1)) return true;
        cols.pop_back();
    }
    return false;
}

std::size_t rank_by_minors(const RatMatrix& m) {
    std::size_t best = 0;
    for (std::size_t r = 1; r <= std::min(m.rows(), m.cols()); ++r)
        if (has_nonzero_minor(m, r, {}, {}, 0, 0)) best = r;
    return best;
}

}  // namespace

TEST_CASE("rank matches the published cases") {
    CHECK(RatMatrix::identity(3).rank() == 3);
    CHECK(RatMatrix(4, 6).rank() == 0);
    RatMatrix proportional(2, 2);
    proportional.at(0, 0) = 1;
    proportional.at(0, 1) = 2;
    proportional.at(1, 0) = 2;
    proportional.at(1, 1) = 4;
    CHECK(proportional.rank() == 1);
}

TEST_CASE("rank agrees with the minor-enumeration oracle") {
    SplitMix64 rng(15);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 2 + rng.below(3), cols = 2 + rng.below(4);
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = Rational(rng.range(-3, 3), rng.range(1, 3));
        const std::size_t got = m.rank();
        CHECK(got == rank_by_minors(m));
        CHECK(got == m.transposed().rank());
        CHECK(got <= std::min(rows, cols));
    }
}

TEST_CASE("solve returns the exact solution or reports singularity") {
    SplitMix64 rng(16);
    for (int trial = 0; trial < 50; ++trial) {
        RatMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = random_rational(rng, 5, 4);
        const std::vector<Rational> x{random_rational(rng), random_rational(rng),
                                      random_rational(rng)};
        std::vector<Rational> b(3, Rational(0));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) b[i] += a.at(i, j) * x[j];
        auto solved = a.solve(b);
        if (a.rank() < 3) {
            CHECK(!solved);
        } else {
            REQUIRE(solved);
            CHECK(*solved == x);
        }
    }
    RatMatrix singular(2, 2);
    singular.at(0, 0) = 1;
    singular.at(0, 1) = 2;
    singular.at(1, 0) = 2;
    singular.at(1, 1) = 4;
    CHECK(!singular.solve({Rational(1), Rational(1)}));
}
