#pragma once

#include <cstddef>
#include <vector>

#include "prelie/rational.hpp"

namespace prelie {

// Dense matrix over exact rationals.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix&) const = default;

    /// Rank over the rationals via fraction-free (Bareiss) elimination on a
    /// denominator-cleared integer copy.
    std::size_t rank() const;

    /// Reduced row echelon form (rational Gauss-Jordan); pivot columns out.
    ExactMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

    /// Basis of the right null space, one vector per free column, echelonized.
    std::vector<std::vector<Rational>> kernel() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace prelie
