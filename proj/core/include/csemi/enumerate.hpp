#pragma once

#include <cstdint>
#include <vector>

#include "csemi/cone.hpp"
#include "csemi/hilbert.hpp"
#include "csemi/matrix_order.hpp"

namespace csemi {

/// Stream of the lattice points of a cone in strictly increasing matrix
/// order, starting at 0. Points are produced weight slice by weight slice
/// (the weight being the order's first row); each slice is finite because the
/// weight row is strictly positive.
///
/// Slices are generated by closing the Hilbert basis under addition: every
/// nonzero point of weight d is basis element + point of smaller weight, so
/// slice(d) = dedup{ q + b : b in basis, q in slice(d - weight(b)) }.
///
/// Single consumer; independent streams over the same cone may run in
/// parallel.
class ConePointStream {
public:
    ConePointStream(ConePtr cone, OrderPtr order);

    /// Next point of the stream (0 first).
    LatticePoint next();

    /// Number of cone points strictly preceding x in the order. Extends the
    /// internal slice table as needed; does not disturb next().
    std::uint64_t count_preceding(const LatticePoint& x);

    /// Points of the cone with weight exactly d, ascending in the order.
    const std::vector<LatticePoint>& slice(std::int64_t d);

private:
    void ensure_weight(std::int64_t d);

    ConePtr cone_;
    OrderPtr order_;
    std::vector<LatticePoint> basis_;
    std::vector<std::int64_t> basis_weight_;
    std::vector<std::vector<LatticePoint>> slices_; // index = weight
    std::size_t cursor_slice_ = 0;
    std::size_t cursor_pos_ = 0;
};

} // namespace csemi
