#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace udlab {

/**
 * Exact arbitrary-precision rational, the carrier for every coordinate and
 * exponent in the library. mpq_rational keeps values canonical (lowest terms,
 * positive denominator), so equality is structural and arithmetic never
 * rounds.
 */
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Serializes as "num/den", "/den" omitted when the denominator is 1.
std::string rat_to_string(const Rational& q);

// Parses "num", "num/den", or a leading-sign variant; rejects everything else.
std::optional<Rational> rat_from_string(const std::string& text);

// Closest double; used only for rendering and heuristic ordering, never
// inside an exact predicate.
double rat_to_double(const Rational& q);

// True iff q is the square of a rational; returns the nonnegative root.
std::optional<Rational> exact_sqrt(const Rational& q);

}  // namespace udlab
