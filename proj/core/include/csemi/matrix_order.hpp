#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "csemi/lattice_point.hpp"
#include "csemi/linalg.hpp"

namespace csemi {

enum class Ordering { Less, Equal, Greater };

/// A total order on Z^p given by a nonsingular integer matrix M: a precedes b
/// when M a is lexicographically smaller than M b. The first row is required
/// to be strictly positive, which makes every point of N^p have only finitely
/// many predecessors and puts 0 below everything.
///
/// The sentinel point (-1,...,-1) compares below every point of N^p and equal
/// to itself, so the root's generators are all eligible tree moves.
class MatrixOrder {
public:
    /// Validate and wrap an order matrix.
    static MatrixOrder from_rows(const IntMatrix& rows);

    /// Graded lexicographic order: weight row of ones, then e_1..e_{p-1}.
    static MatrixOrder grlex(int dim);

    /// Draw a random admissible order: first row uniform in {1..10}^p, other
    /// entries uniform in {-10..10}; singular draws are rejected and redrawn
    /// (at most 1000 attempts). Deterministic for a fixed seed.
    static MatrixOrder random(int dim, std::uint64_t seed);

    int dim() const { return dim_; }

    /// First row of the matrix, the weight functional.
    const LatticePoint& weight_row() const { return rows_[0]; }

    std::int64_t weight(const LatticePoint& x) const { return dot(rows_[0], x); }

    Ordering cmp(const LatticePoint& a, const LatticePoint& b) const;

    bool less(const LatticePoint& a, const LatticePoint& b) const {
        return cmp(a, b) == Ordering::Less;
    }

    IntMatrix rows() const;

private:
    MatrixOrder(int dim, std::vector<LatticePoint> rows)
        : dim_(dim), rows_(std::move(rows)) {}

    int dim_;
    std::vector<LatticePoint> rows_;
};

using OrderPtr = std::shared_ptr<const MatrixOrder>;

} // namespace csemi
