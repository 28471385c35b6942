#include "csemi/matrix_order.hpp"

#include <random>

#include "csemi/errors.hpp"

namespace csemi {

MatrixOrder MatrixOrder::from_rows(const IntMatrix& rows) {
    if (rows.empty()) throw DimensionMismatchError("order matrix is empty");
    std::size_t p = rows.size();
    if (p > static_cast<std::size_t>(kMaxDim))
        throw DimensionMismatchError("order matrix dimension exceeds " + std::to_string(kMaxDim));
    for (const auto& r : rows)
        if (r.size() != p) throw DimensionMismatchError("order matrix is not square");
    for (std::int64_t v : rows[0])
        if (v <= 0) throw NonPositiveFirstRowError("order matrix first row must be strictly positive");
    if (determinant(rows) == 0) throw SingularMatrixError("order matrix is singular");
    std::vector<LatticePoint> pts;
    pts.reserve(p);
    for (const auto& r : rows) pts.emplace_back(std::span<const std::int64_t>(r));
    return MatrixOrder(static_cast<int>(p), std::move(pts));
}

MatrixOrder MatrixOrder::grlex(int dim) {
    IntMatrix rows;
    rows.emplace_back(static_cast<std::size_t>(dim), 1);
    for (int i = 0; i + 1 < dim; ++i) {
        std::vector<std::int64_t> r(static_cast<std::size_t>(dim), 0);
        r[static_cast<std::size_t>(i)] = 1;
        rows.push_back(std::move(r));
    }
    return from_rows(rows);
}

namespace {

// Bounded uniform draw by rejection, so results do not depend on the
// standard library's distribution implementation.
std::int64_t draw_uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
}

} // namespace

MatrixOrder MatrixOrder::random(int dim, std::uint64_t seed) {
    if (dim < 1) throw BadParamsError("order dimension must be positive");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        IntMatrix rows(static_cast<std::size_t>(dim),
                       std::vector<std::int64_t>(static_cast<std::size_t>(dim)));
        for (int j = 0; j < dim; ++j)
            rows[0][static_cast<std::size_t>(j)] = draw_uniform(rng, 1, 10);
        for (int i = 1; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    draw_uniform(rng, -10, 10);
        if (determinant(rows) != 0) return from_rows(rows);
    }
    throw BadParamsError("no nonsingular order matrix found in 1000 draws");
}

Ordering MatrixOrder::cmp(const LatticePoint& a, const LatticePoint& b) const {
    bool sa = a.is_sentinel(), sb = b.is_sentinel();
    if (sa || sb) {
        if (sa && sb) return Ordering::Equal;
        return sa ? Ordering::Less : Ordering::Greater;
    }
    for (const LatticePoint& row : rows_) {
        std::int64_t da = dot(row, a);
        std::int64_t db = dot(row, b);
        if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

IntMatrix MatrixOrder::rows() const {
    IntMatrix m;
    m.reserve(rows_.size());
    for (const LatticePoint& r : rows_) m.push_back(r.to_vector());
    return m;
}

} // namespace csemi
