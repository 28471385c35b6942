#pragma once

#include <memory>
#include <vector>

#include "csemi/lattice_point.hpp"
#include "csemi/linalg.hpp"

namespace csemi {

/// A pointed rational cone inside the nonnegative orthant, carried in both
/// representations: primitive extremal rays and integer facet normals. For a
/// cone whose rays span less than the ambient dimension, membership also
/// requires lying in the span, expressed as `span_orthogonal() . x == 0`.
///
/// Immutable after construction; safe to share across threads.
class Cone {
public:
    /// Build from generating rays (not necessarily extremal, primitive or
    /// distinct). Rays are primitivized, deduplicated and reduced to the
    /// extremal ones; facet normals are computed by exact elimination and
    /// scaled to coprime integers.
    static Cone from_rays(const std::vector<LatticePoint>& rays);

    /// The full nonnegative orthant N^dim.
    static Cone orthant(int dim);

    int dim() const { return dim_; }
    int span_dim() const { return span_dim_; }

    /// Primitive extremal rays, sorted lexicographically.
    const std::vector<LatticePoint>& rays() const { return rays_; }

    /// Coprime integer facet normals n with `n . x >= 0` on the cone.
    const std::vector<LatticePoint>& facets() const { return facets_; }

    /// Integer basis of the orthogonal complement of the ray span (empty for
    /// full-dimensional cones).
    const std::vector<LatticePoint>& span_orthogonal() const { return span_orth_; }

    /// Exact membership of an integer point.
    bool contains(const LatticePoint& x) const {
        for (const LatticePoint& b : span_orth_)
            if (dot(b, x) != 0) return false;
        for (const LatticePoint& n : facets_)
            if (dot(n, x) < 0) return false;
        return true;
    }

    /// True when the cone is exactly N^dim.
    bool is_orthant() const { return is_orthant_; }

private:
    Cone() = default;

    int dim_ = 0;
    int span_dim_ = 0;
    bool is_orthant_ = false;
    std::vector<LatticePoint> rays_;
    std::vector<LatticePoint> facets_;
    std::vector<LatticePoint> span_orth_;
};

using ConePtr = std::shared_ptr<const Cone>;

} // namespace csemi
