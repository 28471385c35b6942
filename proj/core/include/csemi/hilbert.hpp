#pragma once

#include <vector>

#include "csemi/cone.hpp"
#include "csemi/lattice_point.hpp"

namespace csemi {

/// Unique minimal generating set of the monoid C ∩ N^p, sorted
/// lexicographically.
///
/// Method: cover the cone by simplicial subcones spanned by linearly
/// independent subsets of its extremal rays (Caratheodory guarantees the
/// cover), collect the integer points of each subcone's fundamental zonotope
/// { sum lambda_i r_i : 0 <= lambda_i <= 1 }, and discard every collected
/// point that splits as z + y with z collected and y a nonzero point of the
/// monoid. The collected set generates the monoid, so the survivors are
/// exactly its minimal generators.
std::vector<LatticePoint> hilbert_basis(const Cone& cone);

} // namespace csemi
