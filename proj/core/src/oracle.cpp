#include "csemi/oracle.hpp"

#include <algorithm>
#include <functional>

#include "csemi/errors.hpp"
#include "csemi/hilbert.hpp"

namespace csemi::oracle {

namespace {

bool is_in(const std::vector<LatticePoint>& sorted_lex, const LatticePoint& x) {
    return std::binary_search(sorted_lex.begin(), sorted_lex.end(), x, LatticePoint::lex_less);
}

std::vector<LatticePoint> lex_sorted(std::vector<LatticePoint> v) {
    std::sort(v.begin(), v.end(), LatticePoint::lex_less);
    return v;
}

} // namespace

std::vector<LatticePoint> points_with_weight(const Cone& cone, const MatrixOrder& order,
                                             std::int64_t d) {
    int p = cone.dim();
    const LatticePoint& w = order.weight_row();
    std::vector<LatticePoint> out;
    std::vector<std::int64_t> x(static_cast<std::size_t>(p), 0);
    std::function<void(int, std::int64_t)> scan = [&](int coord, std::int64_t rem) {
        if (coord == p - 1) {
            if (rem % w[coord] != 0) return;
            x[static_cast<std::size_t>(coord)] = rem / w[coord];
            LatticePoint pt{std::span<const std::int64_t>(x)};
            if (cone.contains(pt)) out.push_back(pt);
            return;
        }
        for (std::int64_t v = 0; v * w[coord] <= rem; ++v) {
            x[static_cast<std::size_t>(coord)] = v;
            scan(coord + 1, rem - v * w[coord]);
        }
    };
    scan(0, d);
    return lex_sorted(std::move(out));
}

std::vector<LatticePoint> points_up_to_weight(const Cone& cone, const MatrixOrder& order,
                                              std::int64_t bound) {
    std::vector<LatticePoint> out;
    for (std::int64_t d = 0; d <= bound; ++d) {
        std::vector<LatticePoint> slice = points_with_weight(cone, order, d);
        out.insert(out.end(), slice.begin(), slice.end());
    }
    return out;
}

bool verify_closure(const Cone& cone, const std::vector<LatticePoint>& gaps) {
    std::vector<LatticePoint> gap_set = lex_sorted(gaps);
    int p = cone.dim();
    for (const LatticePoint& h : gaps) {
        // Both parts of a split lie in the coordinate box [0, h].
        std::vector<std::int64_t> u(static_cast<std::size_t>(p), 0);
        bool ok = true;
        std::function<void(int)> scan = [&](int coord) {
            if (!ok) return;
            if (coord == p) {
                LatticePoint a{std::span<const std::int64_t>(u)};
                if (a.is_zero() || a == h) return;
                LatticePoint b = h.minus(a);
                if (!cone.contains(a) || !cone.contains(b)) return;
                if (!is_in(gap_set, a) && !is_in(gap_set, b)) ok = false;
                return;
            }
            for (std::int64_t v = 0; v <= h[coord]; ++v) {
                u[static_cast<std::size_t>(coord)] = v;
                scan(coord + 1);
            }
        };
        scan(0);
        if (!ok) return false;
    }
    return true;
}

std::vector<LatticePoint> minimal_gens_from_scratch(const Cone& cone, const MatrixOrder& order,
                                                    const std::vector<LatticePoint>& gaps) {
    if (!verify_closure(cone, gaps))
        throw NotClosedError("gap set complement is not closed under addition");
    std::vector<LatticePoint> gap_set = lex_sorted(gaps);

    std::int64_t max_gap_weight = 0;
    for (const LatticePoint& h : gaps)
        max_gap_weight = std::max(max_gap_weight, order.weight(h));
    std::int64_t basis_weight = 0;
    for (const LatticePoint& b : hilbert_basis(cone))
        basis_weight = std::max(basis_weight, order.weight(b));
    std::int64_t bound = checked_add(checked_mul(2, max_gap_weight), basis_weight);

    std::vector<LatticePoint> members;
    for (const LatticePoint& x : points_up_to_weight(cone, order, bound))
        if (!x.is_zero() && !is_in(gap_set, x)) members.push_back(x);

    auto in_semigroup = [&](const LatticePoint& y) {
        return !y.is_zero() && cone.contains(y) && !is_in(gap_set, y);
    };

    std::vector<LatticePoint> minimal;
    for (const LatticePoint& x : members) {
        std::int64_t wx = order.weight(x);
        bool reducible = false;
        for (const LatticePoint& u : members) {
            if (order.weight(u) >= wx) break; // members are weight-ascending
            if (in_semigroup(x.minus(u))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) minimal.push_back(x);
    }
    return lex_sorted(std::move(minimal));
}

std::vector<std::uint64_t> naive_tree_count(const Cone& cone, const MatrixOrder& order, int gmax) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(gmax + 1), 0);
    std::function<void(const std::vector<LatticePoint>&, int)> visit =
        [&](const std::vector<LatticePoint>& gaps, int genus) {
            ++counts[static_cast<std::size_t>(genus)];
            if (genus == gmax) return;
            LatticePoint fb =
                gaps.empty() ? LatticePoint::sentinel(cone.dim()) : gaps.back();
            for (const LatticePoint& g : minimal_gens_from_scratch(cone, order, gaps)) {
                if (order.cmp(fb, g) != Ordering::Less) continue;
                std::vector<LatticePoint> child_gaps = gaps;
                child_gaps.push_back(g);
                visit(child_gaps, genus + 1);
            }
        };
    visit({}, 0);
    return counts;
}

} // namespace csemi::oracle
