#pragma once

#include <cstdint>
#include <vector>

#include "csemi/cone.hpp"
#include "csemi/matrix_order.hpp"

namespace csemi::oracle {

// Brute-force reference implementations. They recompute from definitions,
// avoiding the incremental generator maintenance and the closure-based point
// stream used by the production path, and exist to cross-validate those in
// tests (the CLI touches them only under --audit). Single-threaded; favor
// clarity over speed.

/// Cone points of weight exactly d, by scanning the coordinate box
/// { x >= 0 : weight(x) = d } and filtering on membership. Lex-sorted.
std::vector<LatticePoint> points_with_weight(const Cone& cone, const MatrixOrder& order,
                                             std::int64_t d);

/// Cone points of weight at most bound, same method.
std::vector<LatticePoint> points_up_to_weight(const Cone& cone, const MatrixOrder& order,
                                              std::int64_t bound);

/// True iff the complement of the gap set inside the cone is closed under
/// addition: every split h = u + v of a gap has a gap on one side.
bool verify_closure(const Cone& cone, const std::vector<LatticePoint>& gaps);

/// Minimal generating set of (C ∩ N^p) \ gaps recomputed from scratch:
/// enumerate members up to weight 2F + B (F max gap weight, B max Hilbert
/// basis weight) and keep those with no two-part split inside the semigroup.
/// Any minimal generator splits inside the monoid with a part of weight in
/// (F, F+B]; both parts would clear the gap range, so none exceeds 2F + B.
/// Throws NotClosedError when the gap set fails verify_closure.
std::vector<LatticePoint> minimal_gens_from_scratch(const Cone& cone, const MatrixOrder& order,
                                                    const std::vector<LatticePoint>& gaps);

/// Per-genus census of the tree with every node's generators recomputed by
/// minimal_gens_from_scratch instead of the incremental rule.
std::vector<std::uint64_t> naive_tree_count(const Cone& cone, const MatrixOrder& order, int gmax);

} // namespace csemi::oracle
