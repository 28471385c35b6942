#include "csemi/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "csemi/rational.hpp"

namespace csemi {

namespace {

void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& f) {
    if (size > n || size <= 0) return;
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        f(idx);
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Integer points of { sum lambda_i r_i : lambda in [0,1]^m } for linearly
// independent rays r_i, collected into `out`. Scans the coordinate bounding
// box [0, sum r_i] and keeps the points whose (unique) coefficient vector
// lies in the unit cube.
void collect_zonotope_points(const std::vector<LatticePoint>& rays,
                             std::unordered_set<LatticePoint, LatticePointHash>& out) {
    int p = rays[0].dim();
    std::size_t m = rays.size();

    IntMatrix system(static_cast<std::size_t>(p), std::vector<std::int64_t>(m));
    for (int row = 0; row < p; ++row)
        for (std::size_t c = 0; c < m; ++c)
            system[static_cast<std::size_t>(row)][c] = rays[c][row];

    LatticePoint box = rays[0];
    for (std::size_t i = 1; i < m; ++i) box = box.plus(rays[i]);

    std::vector<std::int64_t> x(static_cast<std::size_t>(p), 0);
    std::vector<Rational> lambda;
    std::function<void(int)> scan = [&](int coord) {
        if (coord == p) {
            if (!solve_full_column_rank(system, x, lambda)) return;
            for (const Rational& l : lambda)
                if (l.sign() < 0 || l > Rational(1)) return;
            out.emplace(std::span<const std::int64_t>(x));
            return;
        }
        for (std::int64_t v = 0; v <= box[coord]; ++v) {
            x[static_cast<std::size_t>(coord)] = v;
            scan(coord + 1);
        }
    };
    scan(0);
}

} // namespace

std::vector<LatticePoint> hilbert_basis(const Cone& cone) {
    const std::vector<LatticePoint>& rays = cone.rays();
    int m = cone.span_dim();

    std::unordered_set<LatticePoint, LatticePointHash> collected;
    for_each_subset(static_cast<int>(rays.size()), m, [&](const std::vector<int>& idx) {
        std::vector<LatticePoint> sub;
        sub.reserve(idx.size());
        for (int i : idx) sub.push_back(rays[static_cast<std::size_t>(i)]);
        IntMatrix rows;
        for (const LatticePoint& r : sub) rows.push_back(r.to_vector());
        if (matrix_rank(rows) != m) return;
        collect_zonotope_points(sub, collected);
    });

    std::vector<LatticePoint> points(collected.begin(), collected.end());
    points.erase(std::remove_if(points.begin(), points.end(),
                                [](const LatticePoint& q) { return q.is_zero(); }),
                 points.end());

    // Sort by coordinate sum so the reducibility scan can stop early: any
    // nonzero summand of x has strictly smaller coordinate sum.
    auto coord_sum = [](const LatticePoint& q) {
        std::int64_t s = 0;
        for (int i = 0; i < q.dim(); ++i) s = checked_add(s, q[i]);
        return s;
    };
    std::sort(points.begin(), points.end(), [&](const LatticePoint& a, const LatticePoint& b) {
        std::int64_t sa = coord_sum(a), sb = coord_sum(b);
        if (sa != sb) return sa < sb;
        return LatticePoint::lex_less(a, b);
    });

    std::vector<LatticePoint> basis;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const LatticePoint& x = points[i];
        std::int64_t sx = coord_sum(x);
        bool reducible = false;
        for (std::size_t j = 0; j < i && coord_sum(points[j]) < sx; ++j) {
            const LatticePoint& z = points[j];
            bool dominated = true;
            for (int k = 0; k < x.dim(); ++k)
                if (z[k] > x[k]) { dominated = false; break; }
            if (!dominated) continue;
            LatticePoint rest = x.minus(z);
            if (!rest.is_zero() && cone.contains(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }

    std::sort(basis.begin(), basis.end(), LatticePoint::lex_less);
    return basis;
}

} // namespace csemi
