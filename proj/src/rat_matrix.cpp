#include "udlab/rat_matrix.hpp"

#include <stdexcept>

namespace udlab {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::size_t RatMatrix::rank() const {
    RatMatrix m = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        const Rational inv_lead = Rational(1) / m.at(rank, col);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (m.at(r, col) == 0) continue;
            const Rational factor = m.at(r, col) * inv_lead;
            m.at(r, col) = 0;
            for (std::size_t c = col + 1; c < cols_; ++c)
                m.at(r, c) -= factor * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Rational>> RatMatrix::solve(const std::vector<Rational>& rhs) const {
    if (rows_ != cols_ || rhs.size() != rows_)
        throw std::invalid_argument("RatMatrix::solve needs a square system");
    const std::size_t n = rows_;
    RatMatrix m = *this;
    std::vector<Rational> b = rhs;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            std::swap(b[pivot], b[col]);
        }
        const Rational inv_lead = Rational(1) / m.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col) == 0) continue;
            const Rational factor = m.at(r, col) * inv_lead;
            m.at(r, col) = 0;
            for (std::size_t c = col + 1; c < n; ++c) m.at(r, c) -= factor * m.at(col, c);
            b[r] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= m.at(i, c) * x[c];
        x[i] = acc / m.at(i, i);
    }
    return x;
}

void RatMatrix::append_row(const std::vector<Rational>& row) {
    if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
    entries_.insert(entries_.end(), row.begin(), row.end());
    ++rows_;
}

}  // namespace udlab
