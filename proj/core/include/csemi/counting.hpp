#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "csemi/cone.hpp"
#include "csemi/matrix_order.hpp"

namespace csemi {

/// One half-open simplicial piece of an exact partition of a cone's lattice
/// points: rays are linearly independent, and the facet opposite ray i is
/// excluded from the piece when open_facet[i] is set. Every lattice point of
/// the piece decomposes uniquely as fp_point + N-combination of the rays.
struct SimplicialPiece {
    std::vector<LatticePoint> rays;
    std::vector<bool> open_facet;
    std::vector<LatticePoint> fp_points; ///< half-open fundamental parallelepiped
};

/// Exact partition of C ∩ Z^p into half-open simplicial pieces: star
/// triangulation of the extremal rays, then each internal wall is kept by
/// exactly one side, decided by a generic interior direction.
class ConeDecomposition {
public:
    explicit ConeDecomposition(const Cone& cone);

    const std::vector<SimplicialPiece>& pieces() const { return pieces_; }

private:
    std::vector<SimplicialPiece> pieces_;
};

/// Exact count of cone lattice points strictly preceding a given cone point
/// in a matrix order. Layers below the point's weight are counted by coin
/// counting over each piece's ray weights; the boundary layer is resolved by
/// bounded search over ray coefficients, comparing against rows of the order
/// matrix made positive on the layer (adding multiples of the weight row
/// does not change comparisons at fixed weight).
///
/// This makes Frobenius elements of weight in the tens of thousands
/// tractable, where materializing the points below would not be.
class PrecedingCounter {
public:
    PrecedingCounter(ConePtr cone, OrderPtr order);
    ~PrecedingCounter();

    PrecedingCounter(const PrecedingCounter&) = delete;
    PrecedingCounter& operator=(const PrecedingCounter&) = delete;

    /// Number of points of C ∩ N^p strictly below x; x must lie in the cone.
    std::uint64_t count_preceding(const LatticePoint& x);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace csemi
