#include "prelie/exact_matrix.hpp"

#include <stdexcept>

namespace prelie {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    ExactMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o.at(k, j) != 0) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

std::size_t ExactMatrix::rank() const {
    // clear denominators row by row (preserves rank), then run Bareiss
    std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        Integer lcm(1);
        for (std::size_t j = 0; j < cols_; ++j) {
            Integer den = at(i, j).get_den();
            Integer g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            Rational v = at(i, j) * Rational(lcm);
            m[i][j] = v.get_num();
        }
    }

    std::size_t r = 0;
    Integer prev(1);
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && m[pivot][c] == 0) ++pivot;
        if (pivot == rows_) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            for (std::size_t j = c + 1; j < cols_; ++j) {
                Integer t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

ExactMatrix ExactMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
    ExactMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && m.at(pivot, c) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        Rational inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < cols_; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return m;
}

std::vector<std::vector<Rational>> ExactMatrix::kernel() const {
    std::vector<std::size_t> pivots;
    ExactMatrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[f] = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -r.at(p, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace prelie
