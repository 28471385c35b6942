#include "csemi/cone.hpp"

#include <algorithm>
#include <functional>

#include "csemi/errors.hpp"

namespace csemi {

namespace {

// All subsets of {0..n-1} of the given size, emitted as index vectors.
void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (size > n) return;
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

IntMatrix rows_of(const std::vector<LatticePoint>& pts) {
    IntMatrix m;
    m.reserve(pts.size());
    for (const LatticePoint& p : pts) m.push_back(p.to_vector());
    return m;
}

} // namespace

Cone Cone::from_rays(const std::vector<LatticePoint>& input) {
    if (input.empty()) throw EmptyConeError("no rays given");
    int p = input[0].dim();
    for (const LatticePoint& r : input) {
        if (r.dim() != p) throw DimensionMismatchError("rays of mixed dimension");
        if (!r.nonnegative())
            throw BadParamsError("ray " + r.to_string() +
                                 " has a negative coordinate; cones must lie in the nonnegative orthant");
    }

    // Primitivize and deduplicate, dropping zero rays.
    std::vector<LatticePoint> rays;
    for (const LatticePoint& r : input) {
        if (r.is_zero()) continue;
        std::vector<std::int64_t> v = primitive_vector(r.to_vector());
        rays.emplace_back(std::span<const std::int64_t>(v));
    }
    if (rays.empty()) throw EmptyConeError("all rays are zero");
    std::sort(rays.begin(), rays.end(), LatticePoint::lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    Cone cone;
    cone.dim_ = p;

    IntMatrix ray_rows = rows_of(rays);
    int m = matrix_rank(ray_rows);
    cone.span_dim_ = m;

    // Orthogonal complement of the ray span; membership needs it whenever the
    // cone is not full-dimensional.
    if (m < p) {
        for (const auto& b : kernel_basis(ray_rows))
            cone.span_orth_.emplace_back(std::span<const std::int64_t>(b));
    }

    // Facet normals. Every facet hyperplane of the span-full cone is spanned
    // by span_dim-1 linearly independent rays, so scanning ray subsets of
    // that size finds them all; candidates with rays on both sides are not
    // faces and are discarded.
    std::vector<LatticePoint> facets;
    if (m == 1) {
        facets.push_back(rays[0]);
    } else {
        for_each_subset(static_cast<int>(rays.size()), m - 1, [&](const std::vector<int>& idx) {
            IntMatrix constraints;
            for (int i : idx) constraints.push_back(rays[static_cast<std::size_t>(i)].to_vector());
            for (const LatticePoint& b : cone.span_orth_) constraints.push_back(b.to_vector());
            IntMatrix kern = kernel_basis(constraints);
            if (kern.size() != 1) return; // subset does not span a hyperplane of the span
            LatticePoint n{std::span<const std::int64_t>(kern[0])};
            bool pos = false, neg = false;
            for (const LatticePoint& r : rays) {
                std::int64_t d = dot(n, r);
                pos |= d > 0;
                neg |= d < 0;
            }
            if (pos && neg) return;
            if (neg) n = n.scaled(-1);
            facets.push_back(n);
        });
        std::sort(facets.begin(), facets.end(), LatticePoint::lex_less);
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    }
    cone.facets_ = facets;

    // Keep only extremal rays: r is extremal iff the facets through r,
    // together with the span constraints, pin down a single direction.
    std::vector<LatticePoint> extremal;
    for (const LatticePoint& r : rays) {
        IntMatrix incident;
        for (const LatticePoint& n : facets)
            if (dot(n, r) == 0) incident.push_back(n.to_vector());
        for (const LatticePoint& b : cone.span_orth_) incident.push_back(b.to_vector());
        if (m == 1 || matrix_rank(incident) == p - 1) extremal.push_back(r);
    }
    cone.rays_ = extremal;

    // Pointedness: the only x with both x and -x feasible solves all facet
    // and span constraints with equality, so the combined system must have
    // full rank. Cones in the nonnegative orthant always pass.
    {
        IntMatrix all = rows_of(cone.facets_);
        for (const LatticePoint& b : cone.span_orth_) all.push_back(b.to_vector());
        if (matrix_rank(all) != p) throw NotPointedError("cone contains a line");
    }

    cone.is_orthant_ = static_cast<int>(cone.rays_.size()) == p;
    for (int i = 0; cone.is_orthant_ && i < p; ++i)
        cone.is_orthant_ = std::find(cone.rays_.begin(), cone.rays_.end(),
                                     LatticePoint::unit(p, i)) != cone.rays_.end();
    return cone;
}

Cone Cone::orthant(int dim) {
    std::vector<LatticePoint> rays;
    rays.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) rays.push_back(LatticePoint::unit(dim, i));
    return from_rays(rays);
}

} // namespace csemi
