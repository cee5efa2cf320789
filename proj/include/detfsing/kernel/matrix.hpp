#ifndef DETFSING_KERNEL_MATRIX_HPP
#define DETFSING_KERNEL_MATRIX_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "detfsing/kernel/polynomial.hpp"

namespace detfsing {

/// Largest square size accepted by det().
inline constexpr std::size_t kMaxDetSize = 8;

/// Dense rows x cols grid of polynomials over one ring.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

    static PolyMatrix identity(const Ring& ring, std::size_t n) {
        PolyMatrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, 1);
        return m;
    }

    const Ring& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Polynomial& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

    /// Submatrix on the given (0-based) row and column indices, in that order.
    PolyMatrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        PolyMatrix m(ring_, rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
        return m;
    }

    /// Contiguous block [r0, r0+nr) x [c0, c0+nc).
    PolyMatrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
        std::vector<std::size_t> rs(nr), cs(nc);
        for (std::size_t i = 0; i < nr; ++i) rs[i] = r0 + i;
        for (std::size_t j = 0; j < nc; ++j) cs[j] = c0 + j;
        return submatrix(rs, cs);
    }

    PolyMatrix transposed() const {
        PolyMatrix m(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    /// Horizontal concatenation [*this | other].
    PolyMatrix beside(const PolyMatrix& other) const {
        if (other.rows_ != rows_) throw std::invalid_argument("beside: row counts differ");
        PolyMatrix m(ring_, rows_, cols_ + other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
        }
        return m;
    }

    /// Vertical concatenation [*this ; other].
    PolyMatrix above(const PolyMatrix& other) const {
        if (other.cols_ != cols_) throw std::invalid_argument("above: column counts differ");
        PolyMatrix m(ring_, rows_ + other.rows_, cols_);
        for (std::size_t j = 0; j < cols_; ++j) {
            for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, j);
            for (std::size_t i = 0; i < other.rows_; ++i) m(rows_ + i, j) = other(i, j);
        }
        return m;
    }

    /// Entrywise image under a ring map.
    PolyMatrix mapped(const Ring& target, const std::vector<Polynomial>& images) const {
        PolyMatrix m(target, rows_, cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = substitute(entries_[k], target, images);
        return m;
    }

private:
    Ring ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Polynomial> entries_;
};

/// Determinant by Laplace expansion along rows, memoized over the set of
/// columns still available (2^n subproblems).
inline Polynomial det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n > kMaxDetSize) throw std::invalid_argument("det: size " + std::to_string(n) + " exceeds the budget of 8");
    // minors[mask] = det of the last popcount(mask) rows restricted to columns `mask`
    std::vector<Polynomial> minors(std::size_t{1} << n, Polynomial(m.ring()));
    minors[0] = Polynomial::constant(m.ring(), 1);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
        Polynomial acc(m.ring());
        int position = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const Polynomial& a = m(row, c);
            const Polynomial& rest = minors[mask & ~(1u << c)];
            if (!a.is_zero() && !rest.is_zero()) {
                Polynomial term = a * rest;
                acc = position % 2 == 0 ? acc + term : acc - term;
            }
            ++position;
        }
        minors[mask] = std::move(acc);
    }
    return minors.back();
}

}  // namespace detfsing

#endif  // DETFSING_KERNEL_MATRIX_HPP
