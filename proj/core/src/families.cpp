#include "csemi/families.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include "csemi/errors.hpp"

namespace csemi {

namespace {

ConePtr orthant_ptr(int p) { return std::make_shared<const Cone>(Cone::orthant(p)); }

void require(bool cond, const char* msg) {
    if (!cond) throw BadParamsError(msg);
}

/// Gap values of <a, b> below the Frobenius number, by sieving sums.
std::vector<std::int64_t> two_gen_gap_values(std::int64_t a, std::int64_t b) {
    std::int64_t f = two_gen_frobenius(a, b);
    std::vector<char> in(static_cast<std::size_t>(f + 1), 0);
    in[0] = 1;
    for (std::int64_t v = 0; v <= f; ++v) {
        if (!in[static_cast<std::size_t>(v)]) continue;
        if (v + a <= f) in[static_cast<std::size_t>(v + a)] = 1;
        if (v + b <= f) in[static_cast<std::size_t>(v + b)] = 1;
    }
    std::vector<std::int64_t> gaps;
    for (std::int64_t v = 1; v <= f; ++v)
        if (!in[static_cast<std::size_t>(v)]) gaps.push_back(v);
    return gaps;
}

} // namespace

CSemigroup build_easy_2p(int p, std::int64_t h, int i, int k, OrderPtr order) {
    require(p >= 2, "easy-2p family needs p >= 2");
    require(h >= 1, "easy-2p family needs h >= 1; h = 0 degenerates to the root");
    require(i >= 1 && i <= p && k >= 1 && k <= p && i != k, "indices must be distinct in [1..p]");
    LatticePoint ei = LatticePoint::unit(p, i - 1);
    LatticePoint ek = LatticePoint::unit(p, k - 1);

    std::vector<LatticePoint> gaps;
    for (std::int64_t m = 0; m < h; ++m) gaps.push_back(ei.plus(ek.scaled(m)));

    std::vector<LatticePoint> gens;
    for (int j = 1; j <= p; ++j)
        if (j != i) gens.push_back(LatticePoint::unit(p, j - 1));
    gens.push_back(ei.scaled(2));
    gens.push_back(ei.scaled(3));
    gens.push_back(ei.plus(ek.scaled(h)));
    for (int j = 1; j <= p; ++j)
        if (j != i && j != k) gens.push_back(ei.plus(LatticePoint::unit(p, j - 1)));

    return CSemigroup::from_parts(orthant_ptr(p), std::move(order), std::move(gaps),
                                  std::move(gens));
}

CSemigroup build_axis_gaps(int p, std::int64_t q, int j, OrderPtr order) {
    require(p >= 2, "axis-gaps family needs p >= 2");
    require(q >= 1, "axis-gaps family needs q >= 1");
    require(j >= 1 && j <= p, "axis index must lie in [1..p]");
    LatticePoint ej = LatticePoint::unit(p, j - 1);

    std::vector<LatticePoint> gaps;
    for (std::int64_t m = 1; m < q; ++m) gaps.push_back(ej.scaled(m));

    std::vector<LatticePoint> gens;
    for (std::int64_t m = q; m <= 2 * q - 1; ++m) gens.push_back(ej.scaled(m));
    for (int i = 1; i <= p; ++i) {
        if (i == j) continue;
        LatticePoint ei = LatticePoint::unit(p, i - 1);
        gens.push_back(ei);
        for (std::int64_t m = 1; m < q; ++m) gens.push_back(ei.plus(ej.scaled(m)));
    }

    return CSemigroup::from_parts(orthant_ptr(p), std::move(order), std::move(gaps),
                                  std::move(gens));
}

CSemigroup build_two_gen_box(int p, std::int64_t l1, std::int64_t l2,
                             const std::vector<std::int64_t>& q, OrderPtr order) {
    require(p >= 2, "two-gen-box family needs p >= 2");
    require(l1 >= 2 && l2 >= 2, "generators of the numerical part must be >= 2");
    require(gcd_i64(l1, l2) == 1, "generators of the numerical part must be coprime");
    require(static_cast<int>(q.size()) == p - 1, "q needs p-1 entries");
    for (std::int64_t qi : q) require(qi >= 1, "box bounds must be positive");

    std::vector<std::int64_t> axis_gaps = two_gen_gap_values(l1, l2);

    // Gap box: every combination of a numerical gap on axis 1 with box
    // coordinates on the other axes.
    std::vector<LatticePoint> gaps;
    std::vector<std::int64_t> x(static_cast<std::size_t>(p), 0);
    for (std::int64_t u : axis_gaps) {
        x[0] = u;
        std::function<void(int)> fill = [&](int coord) {
            if (coord == p) {
                gaps.emplace_back(std::span<const std::int64_t>(x));
                return;
            }
            for (std::int64_t v = 0; v < q[static_cast<std::size_t>(coord - 1)]; ++v) {
                x[static_cast<std::size_t>(coord)] = v;
                fill(coord + 1);
            }
        };
        fill(1);
    }

    // Minimal generators: l1 e_1, l2 e_1, the other units, and u e_1 + q_i e_i
    // for axis-1 gaps u below the multiplicity. Gaps u >= min(l1,l2) do not
    // contribute: u e_1 + q_i e_i = (u - min) e_1 + q_i e_i + min e_1 splits
    // inside the semigroup.
    std::int64_t mult = std::min(l1, l2);
    std::vector<LatticePoint> gens;
    LatticePoint e1 = LatticePoint::unit(p, 0);
    gens.push_back(e1.scaled(l1));
    gens.push_back(e1.scaled(l2));
    for (int i = 2; i <= p; ++i) gens.push_back(LatticePoint::unit(p, i - 1));
    for (std::int64_t u : axis_gaps) {
        if (u >= mult) continue;
        for (int i = 2; i <= p; ++i)
            gens.push_back(
                e1.scaled(u).plus(LatticePoint::unit(p, i - 1).scaled(q[static_cast<std::size_t>(i - 2)])));
    }

    return CSemigroup::from_parts(orthant_ptr(p), std::move(order), std::move(gaps),
                                  std::move(gens));
}

CSemigroup build_cone_strip(std::int64_t a, std::int64_t b, OrderPtr order) {
    require(a >= 0 && a < b, "cone-strip family needs 0 <= a < b");
    ConePtr cone = std::make_shared<const Cone>(
        Cone::from_rays({LatticePoint{1, 0}, LatticePoint{1, 1}}));

    std::vector<LatticePoint> gaps;
    for (std::int64_t x1 = 1; x1 <= b; ++x1)
        for (std::int64_t x2 = 0; x2 <= std::min(x1, a); ++x2)
            if (x1 != x2) gaps.push_back(LatticePoint{x1, x2});

    std::vector<LatticePoint> gens;
    gens.push_back(LatticePoint{1, 1});
    for (std::int64_t v = b + 1; v <= 2 * b + 1; ++v) gens.push_back(LatticePoint{v, 0});
    for (std::int64_t v = 1; v <= a; ++v) gens.push_back(LatticePoint{b + 1, v});
    for (std::int64_t v = a + 2; v <= b + 1; ++v) gens.push_back(LatticePoint{v, a + 1});

    return CSemigroup::from_parts(std::move(cone), std::move(order), std::move(gaps),
                                  std::move(gens));
}

CSemigroup build_two_gen_numerical(std::int64_t a, std::int64_t b, OrderPtr order) {
    std::vector<LatticePoint> gaps;
    for (std::int64_t v : two_gen_gap_values(a, b)) gaps.push_back(LatticePoint{v});
    std::vector<LatticePoint> gens{LatticePoint{a}, LatticePoint{b}};
    return CSemigroup::from_parts(orthant_ptr(1), std::move(order), std::move(gaps),
                                  std::move(gens));
}

CSemigroup build_interval(std::int64_t b, OrderPtr order) {
    require(b >= 0, "interval family needs b >= 0");
    std::vector<LatticePoint> gaps;
    for (std::int64_t v = 1; v <= b; ++v) gaps.push_back(LatticePoint{v});
    std::vector<LatticePoint> gens;
    for (std::int64_t v : interval_gens(b)) gens.push_back(LatticePoint{v});
    return CSemigroup::from_parts(orthant_ptr(1), std::move(order), std::move(gaps),
                                  std::move(gens));
}

std::int64_t two_gen_frobenius(std::int64_t a, std::int64_t b) {
    require(a >= 2 && b >= 2, "two-generator semigroup needs a, b >= 2");
    if (gcd_i64(a, b) != 1) throw NotCoprimeError("generators must be coprime");
    return checked_sub(checked_sub(checked_mul(a, b), a), b);
}

std::int64_t two_gen_genus(std::int64_t a, std::int64_t b) {
    return (two_gen_frobenius(a, b) + 1) / 2;
}

std::vector<std::int64_t> interval_gens(std::int64_t b) {
    if (b < 0) throw BadParamsError("interval bound must be nonnegative");
    std::vector<std::int64_t> gens;
    for (std::int64_t v = b + 1; v <= 2 * b + 1; ++v) gens.push_back(v);
    return gens;
}

bool check_mult_2p_shape(const CSemigroup& s) {
    if (!s.cone().is_orthant())
        throw NotOrthantConeError("shape check applies to orthant semigroups only");
    int p = s.cone().dim();
    if (s.edim() != static_cast<std::uint64_t>(2 * p)) return false;
    if (s.genus() == 0) return false;

    // Exactly one unit vector must be missing.
    int missing = -1;
    for (int i = 0; i < p; ++i) {
        LatticePoint ei = LatticePoint::unit(p, i);
        bool found = std::find(s.gens().begin(), s.gens().end(), ei) != s.gens().end();
        if (!found) {
            if (missing != -1) return false;
            missing = i;
        }
    }
    if (missing == -1) return false;

    std::vector<std::int64_t> axis_multiples; // l e_missing among the generators
    std::vector<bool> mixed_seen(static_cast<std::size_t>(p), false);
    for (const LatticePoint& g : s.gens()) {
        int support = 0, axis = -1;
        for (int i = 0; i < p; ++i)
            if (g[i] != 0) {
                ++support;
                axis = i;
            }
        if (support == 1 && axis != missing && g[axis] == 1) continue; // unit
        if (support == 1 && axis == missing) {
            axis_multiples.push_back(g[axis]);
            continue;
        }
        // Must be e_missing + q_j e_j with q_j >= 1.
        if (support != 2 || g[missing] != 1) return false;
        int other = -1;
        for (int i = 0; i < p; ++i)
            if (i != missing && g[i] != 0) other = i;
        if (other == -1 || mixed_seen[static_cast<std::size_t>(other)]) return false;
        mixed_seen[static_cast<std::size_t>(other)] = true;
    }

    if (axis_multiples.size() != 2) return false;
    if (gcd_i64(axis_multiples[0], axis_multiples[1]) != 1) return false;
    for (int i = 0; i < p; ++i)
        if (i != missing && !mixed_seen[static_cast<std::size_t>(i)]) return false;
    return true;
}

} // namespace csemi
