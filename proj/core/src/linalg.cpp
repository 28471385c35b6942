#include "csemi/linalg.hpp"

#include <algorithm>

namespace csemi {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i].reserve(m[i].size());
        for (std::int64_t v : m[i]) r[i].emplace_back(v);
    }
    return r;
}

// Gauss-Jordan over Q. Returns the pivot column of each pivot row.
std::vector<int> reduce(RatMatrix& a) {
    std::vector<int> pivot_cols;
    if (a.empty()) return pivot_cols;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    return pivot_cols;
}

} // namespace

int matrix_rank(const IntMatrix& m) {
    if (m.empty()) return 0;
    RatMatrix a = to_rational(m);
    return static_cast<int>(reduce(a).size());
}

std::int64_t determinant(const IntMatrix& m) {
    // Bareiss fraction-free elimination: every division below is exact.
    std::size_t n = m.size();
    if (n == 0) return 1;
    IntMatrix a = m;
    std::int64_t prev = 1;
    std::int64_t sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && a[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(a[sel], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                std::int64_t num = checked_sub(checked_mul(a[i][j], a[k][k]),
                                               checked_mul(a[i][k], a[k][j]));
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return checked_mul(sign, a[n - 1][n - 1]);
}

IntMatrix kernel_basis(const IntMatrix& m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    RatMatrix a = to_rational(m);
    std::vector<int> pivots = reduce(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    IntMatrix basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        // x[free_col] = 1, other free vars 0, pivots solved from the rows.
        std::vector<Rational> x(cols, Rational(0));
        x[free_col] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::size_t pc = static_cast<std::size_t>(pivots[r]);
            x[pc] = Rational(0) - a[r][free_col];
        }
        // Clear denominators, then make primitive.
        std::int64_t lcm = 1;
        for (const Rational& q : x) lcm = checked_mul(lcm / gcd_i64(lcm, q.den()), q.den());
        std::vector<std::int64_t> row(cols);
        for (std::size_t j = 0; j < cols; ++j)
            row[j] = checked_mul(x[j].num(), lcm / x[j].den());
        basis.push_back(primitive_vector(std::move(row)));
    }
    return basis;
}

bool solve_full_column_rank(const IntMatrix& m, const std::vector<std::int64_t>& rhs,
                            std::vector<Rational>& out) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    RatMatrix a(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        a[i].reserve(cols + 1);
        for (std::int64_t v : m[i]) a[i].emplace_back(v);
        a[i].emplace_back(rhs[i]);
    }
    std::vector<int> pivots = reduce(a);
    // Inconsistent iff some pivot landed in the rhs column.
    for (int c : pivots)
        if (static_cast<std::size_t>(c) == cols) return false;
    if (pivots.size() != cols) return false; // not full column rank
    out.assign(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        out[static_cast<std::size_t>(pivots[r])] = a[r][cols];
    return true;
}

std::vector<std::int64_t> primitive_vector(std::vector<std::int64_t> v) {
    std::int64_t g = 0;
    for (std::int64_t x : v) g = gcd_i64(g, x);
    if (g > 1)
        for (std::int64_t& x : v) x /= g;
    for (std::int64_t x : v) {
        if (x != 0) {
            if (x < 0)
                for (std::int64_t& y : v) y = -y;
            break;
        }
    }
    return v;
}

} // namespace csemi
