#pragma once

#include <algorithm>
#include <deque>
#include <memory>
#include <unordered_set>
#include <vector>

#include "csemi/cone.hpp"
#include "csemi/linalg.hpp"
#include "csemi/matrix_order.hpp"
#include "csemi/semigroup.hpp"

namespace csemi::testing {

inline ConePtr cone_from(const std::vector<std::vector<std::int64_t>>& rays) {
    std::vector<LatticePoint> pts;
    for (const auto& r : rays) pts.emplace_back(std::span<const std::int64_t>(r));
    return std::make_shared<const Cone>(Cone::from_rays(pts));
}

inline ConePtr orthant(int p) { return std::make_shared<const Cone>(Cone::orthant(p)); }

inline OrderPtr grlex(int p) { return std::make_shared<const MatrixOrder>(MatrixOrder::grlex(p)); }

inline OrderPtr order_from(const IntMatrix& rows) {
    return std::make_shared<const MatrixOrder>(MatrixOrder::from_rows(rows));
}

inline LatticePoint pt(std::vector<std::int64_t> coords) {
    return LatticePoint{std::span<const std::int64_t>(coords)};
}

inline std::vector<LatticePoint> lex_sorted(std::vector<LatticePoint> v) {
    std::sort(v.begin(), v.end(), LatticePoint::lex_less);
    return v;
}

/// V-representation feasibility: x is a nonnegative rational combination of
/// the rays iff it is one of some linearly independent ray subset
/// (Caratheodory). Exact; independent of the facet route.
inline bool in_cone_by_rays(const Cone& cone, const LatticePoint& x) {
    if (x.is_zero()) return true;
    const std::vector<LatticePoint>& rays = cone.rays();
    int n = static_cast<int>(rays.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<const LatticePoint*> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) sub.push_back(&rays[static_cast<std::size_t>(i)]);
        IntMatrix cols(static_cast<std::size_t>(cone.dim()),
                       std::vector<std::int64_t>(sub.size()));
        IntMatrix rows;
        for (const LatticePoint* r : sub) rows.push_back(r->to_vector());
        if (matrix_rank(rows) != static_cast<int>(sub.size())) continue;
        for (int row = 0; row < cone.dim(); ++row)
            for (std::size_t c = 0; c < sub.size(); ++c)
                cols[static_cast<std::size_t>(row)][c] = (*sub[c])[row];
        std::vector<Rational> lambda;
        if (!solve_full_column_rank(cols, x.to_vector(), lambda)) continue;
        bool ok = true;
        for (const Rational& l : lambda)
            if (l.sign() < 0) ok = false;
        if (ok) return true;
    }
    return false;
}

/// Gap set derived from a generator list by closing it under addition:
/// returns the cone points of weight <= bound that the generators do not
/// reach.
inline std::vector<LatticePoint> gaps_by_closure(const Cone& cone, const MatrixOrder& order,
                                                 const std::vector<LatticePoint>& gens,
                                                 std::int64_t bound,
                                                 const std::vector<LatticePoint>& cone_points) {
    std::unordered_set<LatticePoint, LatticePointHash> reachable;
    std::deque<LatticePoint> queue;
    reachable.insert(LatticePoint::zero(cone.dim()));
    queue.push_back(LatticePoint::zero(cone.dim()));
    while (!queue.empty()) {
        LatticePoint q = queue.front();
        queue.pop_front();
        for (const LatticePoint& g : gens) {
            LatticePoint next = q.plus(g);
            if (order.weight(next) > bound) continue;
            if (reachable.insert(next).second) queue.push_back(next);
        }
    }
    std::vector<LatticePoint> gaps;
    for (const LatticePoint& x : cone_points)
        if (!reachable.count(x)) gaps.push_back(x);
    return lex_sorted(std::move(gaps));
}

} // namespace csemi::testing
