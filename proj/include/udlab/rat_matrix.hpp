#pragma once

#include "udlab/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace udlab {

/**
 * Dense matrix of exact rationals. Row operations never round, so rank is the
 * true rank; the tangent-space lemmas reduce to rank computations on stacked
 * bases of 6-vectors.
 */
class RatMatrix {
  public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RatMatrix transposed() const;

    // Exact rank by rational Gaussian elimination, pivoting on any nonzero
    // entry (the choice cannot change the answer).
    std::size_t rank() const;

    // Solves A x = b for square A; nullopt when A is singular.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;

    void append_row(const std::vector<Rational>& row);

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

}  // namespace udlab
