#pragma once

#include "udlab/rational.hpp"

#include <string>

namespace udlab {

/**
 * Element a + b*sqrt(s) of a real quadratic extension, s >= 0 rational.
 *
 * Every coordinate produced by a line/conic or circle/circle intersection
 * lives in one such extension, so degree 2 is all the algebra the library
 * needs; operations that would leave the extension throw instead of
 * approximating.
 *
 * Construction normalizes: b == 0 or s == 0 collapse to the rational a, and a
 * perfect-square radicand folds into the rational part. Square factors of the
 * radicand are moved into b so that structurally different spellings of the
 * same value usually coincide; comparisons never rely on that, they are
 * radicand-agnostic by construction.
 */
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0), s_(0) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), s_(0) {}  // NOLINT: implicit by design
    QuadExt(long n) : a_(n), b_(0), s_(0) {}                 // NOLINT
    QuadExt(Rational a, Rational b, Rational s);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    const Rational& radicand() const { return s_; }

    bool is_rational() const { return b_ == 0; }
    // Exact value when rational; throws InvalidRadicand otherwise.
    const Rational& as_rational() const;

    bool is_zero() const { return b_ == 0 && a_ == 0; }

    QuadExt operator-() const;
    QuadExt conjugate() const { return QuadExt(a_, -b_, s_); }

    // Same-extension (or rational) operands only; mixing distinct radicands
    // with both radical parts nonzero throws InvalidRadicand.
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }

    std::string str() const;

    double to_double() const;

  private:
    Rational a_, b_, s_;
};

// Exact sign of a + b*sqrt(s), in {-1, 0, +1}.
int quad_sign(const QuadExt& x);

// Exact three-way comparison, valid across distinct radicands (the mixed case
// resolves by one squaring into a single extension followed by quad_sign).
// Returns -1, 0, +1.
int quad_compare(const QuadExt& x, const QuadExt& y);

inline bool quad_eq(const QuadExt& x, const QuadExt& y) { return quad_compare(x, y) == 0; }

}  // namespace udlab
