#pragma once

#include <cstdint>
#include <vector>

#include "csemi/lattice_point.hpp"
#include "csemi/rational.hpp"

namespace csemi {

/// Dense integer matrix carried as rows; exact elimination helpers used for
/// cone facet computation, span tests and order validation.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank of an integer matrix, computed by exact rational elimination.
int matrix_rank(const IntMatrix& m);

/// Determinant of a square integer matrix (fraction-free Bareiss).
std::int64_t determinant(const IntMatrix& m);

/// Basis of the rational null space { x : m x = 0 }, scaled to coprime
/// integer vectors. Rows of the result are the basis vectors.
IntMatrix kernel_basis(const IntMatrix& m);

/// Solve m x = rhs exactly when m has full column rank; returns true and the
/// rational solution iff the system is consistent.
bool solve_full_column_rank(const IntMatrix& m, const std::vector<std::int64_t>& rhs,
                            std::vector<Rational>& out);

/// Divide a vector by the gcd of its entries and flip signs so the first
/// nonzero entry is positive. Zero vectors pass through unchanged.
std::vector<std::int64_t> primitive_vector(std::vector<std::int64_t> v);

} // namespace csemi
