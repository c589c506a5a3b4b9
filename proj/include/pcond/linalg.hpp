#pragma once

// Exact dense linear algebra over fields with exact equality (CycloNum,
// Rational) and integer kernels over Z.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pcond/cyclo.hpp"

namespace pcond {

template <class T>
using Matrix = std::vector<std::vector<T>>;

using IntMatrix = std::vector<std::vector<std::int64_t>>;

namespace linalg {

namespace detail {

inline bool is_zero(const CycloNum& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline CycloNum inv(const CycloNum& x) { return x.inverse(); }
inline Rational inv(const Rational& x) { return Rational(1) / x; }

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& a, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t piv = row;
        while (piv < a.size() && is_zero(a[piv][col])) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[row], a[piv]);
        const T scale = inv(a[row][col]);
        for (auto& x : a[row]) x = x * scale;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || is_zero(a[r][col])) continue;
            const T factor = a[r][col];
            for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] = a[r][c] - factor * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

template <class T>
std::size_t rank(Matrix<T> a) {
    if (a.empty()) return 0;
    return detail::rref(a, a.front().size()).size();
}

/// Unique solution x of A x = b for square A; std::nullopt when A is singular.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
    Matrix<T> aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("solve: matrix is not square");
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    auto pivots = detail::rref(aug, n);
    if (pivots.size() != n) return std::nullopt;
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = aug[i][n];
    return x;
}

/// Z-basis of {x in Z^n : A x = 0} for an m x n integer matrix.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols);

/// Solves A x = b over Q for an integer matrix A of full column rank; returns
/// the unique solution if one exists.
std::optional<std::vector<Rational>> solve_full_column_rank(const IntMatrix& a, const std::vector<Rational>& b);

}  // namespace linalg

}  // namespace pcond
