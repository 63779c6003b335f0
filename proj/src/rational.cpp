#include "udlab/rational.hpp"

#include <cctype>

namespace udlab {

std::string rat_to_string(const Rational& q) {
    return q.str();  // mpq prints "num/den" and omits a unit denominator
}

std::optional<Rational> rat_from_string(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            if (slash != std::string::npos || i == 0 || i + 1 == text.size()) return std::nullopt;
            slash = i;
        } else if (c == '-' || c == '+') {
            if (i != 0) return std::nullopt;
        } else if (!std::isdigit(static_cast<unsigned char>(c))) {
            return std::nullopt;
        }
    }
    if ((text[0] == '-' || text[0] == '+') && text.size() == 1) return std::nullopt;
    try {
        Rational q(text);
        return q;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

double rat_to_double(const Rational& q) { return q.convert_to<double>(); }

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    BigInt rn = boost::multiprecision::sqrt(num);
    BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

}  // namespace udlab
