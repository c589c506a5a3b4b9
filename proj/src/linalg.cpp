#include "pcond/linalg.hpp"

namespace pcond::linalg {

IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols) {
    // Row-reduce [A^T | I] with unimodular integer operations; rows whose left
    // block vanishes carry a basis of the kernel in their right block.
    const std::size_t m = a.size();
    std::vector<std::vector<Integer>> rows(ncols, std::vector<Integer>(m + ncols));
    for (std::size_t j = 0; j < ncols; ++j) {
        for (std::size_t i = 0; i < m; ++i) rows[j][i] = a[i][j];
        rows[j][m + j] = 1;
    }
    std::size_t top = 0;
    for (std::size_t col = 0; col < m && top < ncols; ++col) {
        // Euclid on column col among rows top..end
        while (true) {
            std::size_t best = ncols;
            for (std::size_t r = top; r < ncols; ++r)
                if (sgn(rows[r][col]) != 0 && (best == ncols || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
            if (best == ncols) break;
            std::swap(rows[top], rows[best]);
            bool done = true;
            for (std::size_t r = top + 1; r < ncols; ++r) {
                if (sgn(rows[r][col]) == 0) continue;
                Integer q = rows[r][col] / rows[top][col];
                for (std::size_t c = 0; c < m + ncols; ++c) rows[r][c] -= q * rows[top][c];
                if (sgn(rows[r][col]) != 0) done = false;
            }
            if (done) {
                ++top;
                break;
            }
        }
    }
    IntMatrix kernel;
    for (std::size_t r = top; r < ncols; ++r) {
        bool zero = true;
        for (std::size_t i = 0; i < m; ++i) zero = zero && sgn(rows[r][i]) == 0;
        if (!zero) continue;
        std::vector<std::int64_t> v(ncols);
        for (std::size_t j = 0; j < ncols; ++j) {
            if (!rows[r][m + j].fits_slong_p()) throw std::overflow_error("integer_kernel: entry overflow");
            v[j] = rows[r][m + j].get_si();
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::optional<std::vector<Rational>> solve_full_column_rank(const IntMatrix& a, const std::vector<Rational>& b) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a.front().size() : 0;
    Matrix<Rational> aug(m, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n] = b[i];
    }
    auto pivots = detail::rref(aug, n + 1);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // inconsistent
    if (pivots.size() != n) throw std::invalid_argument("solve_full_column_rank: matrix is rank deficient");
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = aug[i][n];
    return x;
}

}  // namespace pcond::linalg
