#include "udlab/quadext.hpp"

#include "udlab/errors.hpp"

#include <cmath>
#include <utility>

namespace udlab {

namespace {

// Small primes used to pull square factors out of the radicand. Larger square
// factors are left in place; comparisons stay exact either way, only the
// structural spelling is affected.
constexpr long kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

}  // namespace

QuadExt::QuadExt(Rational a, Rational b, Rational s)
    : a_(std::move(a)), b_(std::move(b)), s_(std::move(s)) {
    if (s_ < 0) throw InvalidRadicand("negative radicand " + rat_to_string(s_));
    if (b_ == 0 || s_ == 0) {
        b_ = 0;
        s_ = 0;
        return;
    }
    if (auto root = exact_sqrt(s_)) {
        a_ += b_ * *root;
        b_ = 0;
        s_ = 0;
        return;
    }
    // b*sqrt(N/D) == (b/D)*sqrt(N*D); then strip small square factors of N*D.
    BigInt m = numerator(s_) * denominator(s_);
    BigInt k = 1;
    for (long p : kSmallPrimes) {
        BigInt p2 = BigInt(p) * p;
        while (m % p2 == 0) {
            m /= p2;
            k *= p;
        }
    }
    b_ *= Rational(k, denominator(s_));
    s_ = Rational(m);
}

const Rational& QuadExt::as_rational() const {
    if (!is_rational()) throw InvalidRadicand("value " + str() + " is irrational");
    return a_;
}

QuadExt QuadExt::operator-() const {
    QuadExt r;
    r.a_ = -a_;
    r.b_ = -b_;
    r.s_ = s_;
    return r;
}

namespace {

// Radicand both operands agree on; throws when two distinct irrationalities
// would have to mix (the result would leave every quadratic extension).
const Rational& common_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.radical_coeff() == 0) return y.radicand();
    if (y.radical_coeff() == 0) return x.radicand();
    if (x.radicand() != y.radicand())
        throw InvalidRadicand("cannot combine sqrt(" + rat_to_string(x.radicand()) +
                              ") with sqrt(" + rat_to_string(y.radicand()) + ")");
    return x.radicand();
}

}  // namespace

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    const Rational& s = common_radicand(x, y);
    return QuadExt(x.rational_part() + y.rational_part(), x.radical_coeff() + y.radical_coeff(),
                   s);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    const Rational& s = common_radicand(x, y);
    return QuadExt(x.rational_part() - y.rational_part(), x.radical_coeff() - y.radical_coeff(),
                   s);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    const Rational& s = common_radicand(x, y);
    const Rational &a1 = x.rational_part(), &b1 = x.radical_coeff();
    const Rational &a2 = y.rational_part(), &b2 = y.radical_coeff();
    return QuadExt(a1 * a2 + b1 * b2 * s, a1 * b2 + a2 * b1, s);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw std::domain_error("QuadExt division by zero");
    const Rational& s = common_radicand(x, y);
    // Multiply by the conjugate; the norm a^2 - b^2 s vanishes only at zero.
    const Rational &a2 = y.rational_part(), &b2 = y.radical_coeff();
    Rational norm = a2 * a2 - b2 * b2 * s;
    QuadExt num = x * y.conjugate();
    return QuadExt(num.rational_part() / norm, num.radical_coeff() / norm, s);
}

int quad_sign(const QuadExt& x) {
    const Rational &a = x.rational_part(), &b = x.radical_coeff(), &s = x.radicand();
    if (b == 0) return sign_of(a);
    if (a == 0) return sign_of(b);
    int sa = sign_of(a), sb = sign_of(b);
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|sqrt(s) decides, by squaring.
    return sa * sign_of(a * a - b * b * s);
}

int quad_compare(const QuadExt& x, const QuadExt& y) {
    const bool xr = x.is_rational(), yr = y.is_rational();
    if (xr || yr || x.radicand() == y.radicand()) {
        return quad_sign(x - y);
    }
    // Distinct radicands: decide sign of E = A + B*sqrt(s) - C*sqrt(t) with
    // B, C != 0. Compare P = A + B*sqrt(s) against Q = C*sqrt(t); when both
    // sides have the same strict sign, one squaring lands back in Q(sqrt(s)).
    const Rational A = x.rational_part() - y.rational_part();
    const Rational &B = x.radical_coeff(), &s = x.radicand();
    const Rational &C = y.radical_coeff(), &t = y.radicand();
    QuadExt p(A, B, s);
    int sp = quad_sign(p);
    int sq = sign_of(C);
    if (sp == 0) return -sq;
    if (sp > 0 && sq < 0) return +1;
    if (sp < 0 && sq > 0) return -1;
    // p and q share a strict sign; sign(p - q) == sign(p^2 - q^2) times it.
    QuadExt diff_of_squares(A * A + B * B * s - C * C * t, 2 * A * B, s);
    return sp > 0 ? quad_sign(diff_of_squares) : -quad_sign(diff_of_squares);
}

std::string QuadExt::str() const {
    if (b_ == 0) return rat_to_string(a_);
    std::string out = rat_to_string(a_);
    out += (b_ < 0) ? "-" : "+";
    out += rat_to_string(rat_abs(b_));
    out += "*sqrt(";
    out += rat_to_string(s_);
    out += ")";
    return out;
}

double QuadExt::to_double() const {
    double v = rat_to_double(a_);
    if (b_ != 0) v += rat_to_double(b_) * std::sqrt(rat_to_double(s_));
    return v;
}

}  // namespace udlab
