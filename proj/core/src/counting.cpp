#include "csemi/counting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "csemi/errors.hpp"
#include "csemi/rational.hpp"

namespace csemi {

namespace {

// Star triangulation of the cone spanned by the given rays: recurse over the
// facets not containing the apex ray.
void triangulate(const std::vector<LatticePoint>& input,
                 std::vector<std::vector<LatticePoint>>& out) {
    Cone cone = Cone::from_rays(input);
    const std::vector<LatticePoint>& rays = cone.rays();
    int m = cone.span_dim();
    if (static_cast<int>(rays.size()) == m) {
        out.push_back(rays);
        return;
    }
    const LatticePoint& apex = rays.front();
    for (const LatticePoint& n : cone.facets()) {
        if (dot(n, apex) == 0) continue;
        std::vector<LatticePoint> facet_rays;
        for (const LatticePoint& r : rays)
            if (dot(n, r) == 0) facet_rays.push_back(r);
        std::vector<std::vector<LatticePoint>> sub;
        triangulate(facet_rays, sub);
        for (std::vector<LatticePoint>& simplex : sub) {
            simplex.push_back(apex);
            std::sort(simplex.begin(), simplex.end(), LatticePoint::lex_less);
            out.push_back(std::move(simplex));
        }
    }
}

// Inward facet normals of a simplicial piece: normal i vanishes on every ray
// but ray i and is positive on ray i.
std::vector<LatticePoint> piece_wall_normals(const std::vector<LatticePoint>& rays,
                                             const Cone& cone) {
    std::vector<LatticePoint> normals;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        IntMatrix constraints;
        for (std::size_t j = 0; j < rays.size(); ++j)
            if (j != i) constraints.push_back(rays[j].to_vector());
        for (const LatticePoint& b : cone.span_orthogonal()) constraints.push_back(b.to_vector());
        if (constraints.empty()) {
            // one ray spanning the whole (1-dimensional) space
            normals.push_back(rays[i]);
            continue;
        }
        IntMatrix kern = kernel_basis(constraints);
        if (kern.size() != 1)
            throw Error("degenerate simplicial piece"); // rays were independent
        LatticePoint n{std::span<const std::int64_t>(kern[0])};
        if (dot(n, rays[i]) < 0) n = n.scaled(-1);
        normals.push_back(n);
    }
    return normals;
}

// Integer points of the half-open fundamental parallelepiped
// { sum mu_i r_i : mu_i in [0,1), or (0,1] where the facet is open }.
std::vector<LatticePoint> half_open_fp(const std::vector<LatticePoint>& rays,
                                       const std::vector<bool>& open_facet) {
    int p = rays[0].dim();
    std::size_t m = rays.size();
    IntMatrix system(static_cast<std::size_t>(p), std::vector<std::int64_t>(m));
    for (int row = 0; row < p; ++row)
        for (std::size_t c = 0; c < m; ++c)
            system[static_cast<std::size_t>(row)][c] = rays[c][row];

    LatticePoint box = rays[0];
    for (std::size_t i = 1; i < m; ++i) box = box.plus(rays[i]);

    std::vector<LatticePoint> fp;
    std::vector<std::int64_t> x(static_cast<std::size_t>(p), 0);
    std::vector<Rational> mu;
    std::function<void(int)> scan = [&](int coord) {
        if (coord == p) {
            if (!solve_full_column_rank(system, x, mu)) return;
            for (std::size_t i = 0; i < m; ++i) {
                if (open_facet[i]) {
                    if (mu[i].sign() <= 0 || mu[i] > Rational(1)) return;
                } else {
                    if (mu[i].sign() < 0 || mu[i] >= Rational(1)) return;
                }
            }
            fp.emplace_back(std::span<const std::int64_t>(x));
            return;
        }
        for (std::int64_t v = 0; v <= box[coord]; ++v) {
            x[static_cast<std::size_t>(coord)] = v;
            scan(coord + 1);
        }
    };
    scan(0);
    return fp;
}

} // namespace

ConeDecomposition::ConeDecomposition(const Cone& cone) {
    std::vector<std::vector<LatticePoint>> simplices;
    triangulate(cone.rays(), simplices);

    std::vector<std::vector<LatticePoint>> walls;
    walls.reserve(simplices.size());
    for (const auto& rays : simplices) walls.push_back(piece_wall_normals(rays, cone));

    // Generic interior direction: a positive integer combination of the rays
    // avoiding every wall hyperplane decides which side keeps each wall.
    LatticePoint xi;
    std::mt19937_64 rng(0x5eedc0de);
    for (int attempt = 0; attempt < 1000 && xi.dim() == 0; ++attempt) {
        LatticePoint candidate = LatticePoint::zero(cone.dim());
        for (const LatticePoint& r : cone.rays())
            candidate = candidate.plus(r.scaled(1 + static_cast<std::int64_t>(rng() % 997)));
        bool generic = true;
        for (const auto& ws : walls)
            for (const LatticePoint& u : ws)
                if (dot(u, candidate) == 0) generic = false;
        if (generic) xi = candidate;
    }
    if (xi.dim() == 0) throw Error("no generic interior direction found");

    for (std::size_t s = 0; s < simplices.size(); ++s) {
        SimplicialPiece piece;
        piece.rays = simplices[s];
        piece.open_facet.resize(piece.rays.size());
        for (std::size_t i = 0; i < piece.rays.size(); ++i)
            piece.open_facet[i] = dot(walls[s][i], xi) < 0;
        piece.fp_points = half_open_fp(piece.rays, piece.open_facet);
        pieces_.push_back(std::move(piece));
    }
}

// ---------------------------------------------------------------------------

namespace {

// min/max of v_i / u_i over a coordinate suffix, as exact fractions.
struct RatioRange {
    std::int64_t min_num, min_den;
    std::int64_t max_num, max_den;
};

} // namespace

struct PrecedingCounter::Impl {
    ConePtr cone;
    OrderPtr order;
    ConeDecomposition decomposition;
    std::vector<LatticePoint> rows; // order matrix rows

    struct PieceData {
        std::vector<LatticePoint> rays;           // sorted by descending weight
        std::vector<std::int64_t> u;              // ray weights, > 0
        std::vector<LatticePoint> fp_points;
        std::vector<std::int64_t> fp_weight;
        // Per tail row j (row index j+1 of the order matrix): dots of the
        // positivized row (row + shift_j * weight_row) with each ray, the
        // shift itself, and min/max ratio v/u per coordinate suffix.
        std::vector<std::vector<std::int64_t>> v;
        std::vector<std::int64_t> shift;
        std::vector<std::vector<RatioRange>> ranges;
        // Coin tables up to the current bound: suffix_count[i][r] counts
        // {a_i.. >= 0 : sum a_q u_q = r}; cum[r] sums suffix_count[0][0..r].
        std::vector<std::vector<std::uint64_t>> suffix_count;
        std::vector<std::uint64_t> cum;
    };
    std::vector<PieceData> pieces;
    std::int64_t table_bound = -1;

    Impl(ConePtr c, OrderPtr o) : cone(std::move(c)), order(std::move(o)), decomposition(*cone) {
        IntMatrix mrows = order->rows();
        for (const auto& r : mrows) rows.emplace_back(std::span<const std::int64_t>(r));
        const LatticePoint& w = rows[0];

        for (const SimplicialPiece& piece : decomposition.pieces()) {
            PieceData pd;
            pd.rays = piece.rays;
            std::sort(pd.rays.begin(), pd.rays.end(),
                      [&](const LatticePoint& a, const LatticePoint& b) {
                          std::int64_t wa = dot(w, a), wb = dot(w, b);
                          if (wa != wb) return wa > wb; // big coins first
                          return LatticePoint::lex_less(a, b);
                      });
            for (const LatticePoint& r : pd.rays) pd.u.push_back(dot(w, r));
            pd.fp_points = piece.fp_points;
            for (const LatticePoint& q : pd.fp_points) pd.fp_weight.push_back(dot(w, q));

            for (std::size_t j = 1; j < rows.size(); ++j) {
                std::int64_t t = 0;
                for (std::size_t i = 0; i < pd.rays.size(); ++i) {
                    std::int64_t d = dot(rows[j], pd.rays[i]);
                    while (checked_add(d, checked_mul(t, pd.u[i])) <= 0) ++t;
                }
                std::vector<std::int64_t> vrow;
                for (std::size_t i = 0; i < pd.rays.size(); ++i)
                    vrow.push_back(
                        checked_add(dot(rows[j], pd.rays[i]), checked_mul(t, pd.u[i])));
                std::vector<RatioRange> rr(pd.rays.size());
                for (std::size_t i = pd.rays.size(); i-- > 0;) {
                    RatioRange cur{vrow[i], pd.u[i], vrow[i], pd.u[i]};
                    if (i + 1 < pd.rays.size()) {
                        const RatioRange& nxt = rr[i + 1];
                        if (static_cast<__int128>(nxt.min_num) * cur.min_den <
                            static_cast<__int128>(cur.min_num) * nxt.min_den) {
                            cur.min_num = nxt.min_num;
                            cur.min_den = nxt.min_den;
                        }
                        if (static_cast<__int128>(nxt.max_num) * cur.max_den >
                            static_cast<__int128>(cur.max_num) * nxt.max_den) {
                            cur.max_num = nxt.max_num;
                            cur.max_den = nxt.max_den;
                        }
                    }
                    rr[i] = cur;
                }
                pd.v.push_back(std::move(vrow));
                pd.shift.push_back(t);
                pd.ranges.push_back(std::move(rr));
            }
            pieces.push_back(std::move(pd));
        }
    }

    void ensure_tables(std::int64_t bound) {
        if (bound <= table_bound) return;
        for (PieceData& pd : pieces) {
            std::size_t m = pd.u.size();
            std::size_t size = static_cast<std::size_t>(bound + 1);
            pd.suffix_count.assign(m + 1, std::vector<std::uint64_t>(size, 0));
            pd.suffix_count[m][0] = 1;
            for (std::size_t i = m; i-- > 0;) {
                std::vector<std::uint64_t>& cur = pd.suffix_count[i];
                const std::vector<std::uint64_t>& next = pd.suffix_count[i + 1];
                std::int64_t coin = pd.u[i];
                for (std::int64_t r = 0; r <= bound; ++r) {
                    std::uint64_t val = next[static_cast<std::size_t>(r)];
                    if (r >= coin) {
                        std::uint64_t prev = cur[static_cast<std::size_t>(r - coin)];
                        if (val > UINT64_MAX - prev) throw OverflowError("count overflow");
                        val += prev;
                    }
                    cur[static_cast<std::size_t>(r)] = val;
                }
            }
            pd.cum.assign(static_cast<std::size_t>(bound + 1), 0);
            std::uint64_t acc = 0;
            for (std::int64_t r = 0; r <= bound; ++r) {
                std::uint64_t c = pd.suffix_count[0][static_cast<std::size_t>(r)];
                if (acc > UINT64_MAX - c) throw OverflowError("count overflow");
                acc += c;
                pd.cum[static_cast<std::size_t>(r)] = acc;
            }
        }
        table_bound = bound;
    }

    // #{ a >= 0 : sum a_i u_i = rem (coordinates i..), partial + sum a_i v_i
    // < target }, accepting or rejecting whole subtrees through the exact
    // ratio bounds.
    std::uint64_t count_layer_below(const PieceData& pd, const std::vector<std::int64_t>& v,
                                    const std::vector<RatioRange>& ranges, std::size_t i,
                                    std::int64_t rem, __int128 partial, __int128 target) const {
        if (rem == 0) return partial < target ? 1 : 0;
        if (i == pd.u.size()) return 0;
        const RatioRange& rr = ranges[i];
        // everything below target: partial + rem*max(v/u) < target
        if ((partial - target) * rr.max_den + static_cast<__int128>(rem) * rr.max_num < 0)
            return pd.suffix_count[i][static_cast<std::size_t>(rem)];
        // nothing below target: partial + rem*min(v/u) >= target
        if ((partial - target) * rr.min_den + static_cast<__int128>(rem) * rr.min_num >= 0)
            return 0;
        if (i + 1 == pd.u.size()) {
            if (rem % pd.u[i] != 0) return 0;
            return partial + static_cast<__int128>(rem / pd.u[i]) * v[i] < target ? 1 : 0;
        }
        std::uint64_t total = 0;
        for (std::int64_t a = 0; a * pd.u[i] <= rem; ++a) {
            std::uint64_t c = count_layer_below(pd, v, ranges, i + 1, rem - a * pd.u[i],
                                                partial + static_cast<__int128>(a) * v[i], target);
            if (total > UINT64_MAX - c) throw OverflowError("count overflow");
            total += c;
        }
        return total;
    }

    // Collect the points q + sum a_i rays_i with sum a_i u_i = rem and
    // partial + sum a_i v_i == target.
    void collect_layer_equal(const PieceData& pd, const std::vector<std::int64_t>& v,
                             const std::vector<RatioRange>& ranges, std::size_t i,
                             std::int64_t rem, __int128 partial, __int128 target,
                             LatticePoint acc, std::vector<LatticePoint>& out) const {
        if (rem == 0) {
            if (partial == target) out.push_back(acc);
            return;
        }
        if (i == pd.u.size()) return;
        const RatioRange& rr = ranges[i];
        if ((partial - target) * rr.max_den + static_cast<__int128>(rem) * rr.max_num < 0) return;
        if ((partial - target) * rr.min_den + static_cast<__int128>(rem) * rr.min_num > 0) return;
        if (i + 1 == pd.u.size()) {
            if (rem % pd.u[i] != 0) return;
            std::int64_t a = rem / pd.u[i];
            if (partial + static_cast<__int128>(a) * v[i] == target)
                out.push_back(acc.plus(pd.rays[i].scaled(a)));
            return;
        }
        for (std::int64_t a = 0; a * pd.u[i] <= rem; ++a)
            collect_layer_equal(pd, v, ranges, i + 1, rem - a * pd.u[i],
                                partial + static_cast<__int128>(a) * v[i], target,
                                acc.plus(pd.rays[i].scaled(a)), out);
    }

    std::uint64_t count_preceding(const LatticePoint& x) {
        std::int64_t weight_x = dot(rows[0], x);
        ensure_tables(weight_x);
        int p = order->dim();

        std::uint64_t total = 0;
        for (const PieceData& pd : pieces) {
            for (std::size_t qi = 0; qi < pd.fp_points.size(); ++qi) {
                const LatticePoint& q = pd.fp_points[qi];
                std::int64_t below = weight_x - 1 - pd.fp_weight[qi];
                if (below >= 0) {
                    std::uint64_t c = pd.cum[static_cast<std::size_t>(below)];
                    if (total > UINT64_MAX - c) throw OverflowError("count overflow");
                    total += c;
                }
                std::int64_t rem = weight_x - pd.fp_weight[qi];
                if (rem < 0 || p == 1) continue; // a weight-tied point is x itself
                // stratum: row 2 strictly smaller
                __int128 target2 = static_cast<__int128>(dot(rows[1], x)) -
                                   static_cast<__int128>(dot(rows[1], q)) +
                                   static_cast<__int128>(pd.shift[0]) * rem;
                std::uint64_t c =
                    count_layer_below(pd, pd.v[0], pd.ranges[0], 0, rem, 0, target2);
                if (total > UINT64_MAX - c) throw OverflowError("count overflow");
                total += c;
                if (p == 2) continue; // rows 1..2 equal pins the point to x
                // stratum: row 2 tied, later rows decide
                std::vector<LatticePoint> equal_pts;
                collect_layer_equal(pd, pd.v[0], pd.ranges[0], 0, rem, 0, target2, q, equal_pts);
                for (const LatticePoint& y : equal_pts) {
                    for (int j = 2; j < p; ++j) {
                        std::int64_t dy = dot(rows[static_cast<std::size_t>(j)], y);
                        std::int64_t dx = dot(rows[static_cast<std::size_t>(j)], x);
                        if (dy == dx) continue;
                        if (dy < dx) ++total;
                        break;
                    }
                }
            }
        }
        return total;
    }
};

PrecedingCounter::PrecedingCounter(ConePtr cone, OrderPtr order)
    : impl_(std::make_unique<Impl>(std::move(cone), std::move(order))) {}

PrecedingCounter::~PrecedingCounter() = default;

std::uint64_t PrecedingCounter::count_preceding(const LatticePoint& x) {
    return impl_->count_preceding(x);
}

} // namespace csemi
