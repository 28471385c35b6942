#pragma once

#include <cstdint>
#include <vector>

#include "csemi/cone.hpp"
#include "csemi/counting.hpp"
#include "csemi/matrix_order.hpp"

namespace csemi {

/// Outcome of the extended Wilf inequality on one semigroup.
///
/// The Frobenius number of a C-semigroup is n(S) + g(S); on numerical
/// semigroups this equals the classical Frobenius number plus one, so the
/// inequality recorded in `holds` is n(S) * e(S) >= n(S) + g(S), the exact
/// generalization of classical Wilf (see README for the convention).
struct WilfRecord {
    std::uint64_t sporadic;         ///< n(S): elements of S strictly below Fb(S)
    std::uint64_t edim;             ///< e(S)
    std::uint64_t genus;            ///< g(S)
    std::uint64_t frobenius_number; ///< N(Fb(S)) = n(S) + g(S)
    bool holds;                     ///< n * e >= n + g
};

/// An affine semigroup S inside a cone C with finitely many gaps
/// H(S) = (C \ S) ∩ N^p, represented by its gap set and its minimal
/// generating set, both kept ascending in the matrix order.
///
/// Values are immutable; producing a son allocates a new value, so subtree
/// expansions can proceed independently across threads.
class CSemigroup {
public:
    /// The root of the tree: S = C ∩ N^p, no gaps, generated by the Hilbert
    /// basis, Frobenius element the sentinel (-1,...,-1).
    static CSemigroup root(ConePtr cone, OrderPtr order);

    /// Rebuild a semigroup from its gap set by descending the tree: gaps are
    /// removed in increasing order, each as a minimal generator of the
    /// partial semigroup. Throws NotClosedError when the gap set does not
    /// describe a C-semigroup.
    static CSemigroup from_gaps(ConePtr cone, OrderPtr order, std::vector<LatticePoint> gaps);

    /// Assemble a semigroup from known gap and generator sets (family
    /// constructors). Inputs are sorted; correctness is the caller's
    /// contract and is cross-checked in tests.
    static CSemigroup from_parts(ConePtr cone, OrderPtr order, std::vector<LatticePoint> gaps,
                                 std::vector<LatticePoint> gens);

    const Cone& cone() const { return *cone_; }
    const MatrixOrder& order() const { return *order_; }
    ConePtr cone_ptr() const { return cone_; }
    OrderPtr order_ptr() const { return order_; }

    /// Gap set H(S), ascending in the order; back() is the Frobenius element.
    const std::vector<LatticePoint>& gaps() const { return gaps_; }

    /// Minimal generating set, ascending in the order.
    const std::vector<LatticePoint>& gens() const { return gens_; }

    std::uint64_t genus() const { return gaps_.size(); }
    std::uint64_t edim() const { return gens_.size(); }

    /// Frobenius element: the largest gap, or the sentinel for the root.
    LatticePoint frobenius() const {
        return gaps_.empty() ? LatticePoint::sentinel(cone_->dim()) : gaps_.back();
    }

    /// Membership: x lies in the cone and is not a gap.
    bool member(const LatticePoint& x) const {
        return cone_->contains(x) && !is_gap(x);
    }

    bool is_gap(const LatticePoint& x) const;

    /// Definitional minimal-generator test for a member x != 0: x splits as
    /// a + b with a, b nonzero members iff it splits with a equal to some
    /// minimal generator, so scanning gens() decides exactly.
    bool is_minimal_generator(const LatticePoint& x) const;

    /// Number of generators strictly above the Frobenius element; each one
    /// indexes an effective son.
    int eligible_count() const { return static_cast<int>(gens_.size()) - first_eligible_; }

    /// The generator removed by the k-th effective son, 0 <= k < eligible_count().
    const LatticePoint& eligible_generator(int k) const {
        return gens_[static_cast<std::size_t>(first_eligible_ + k)];
    }

    /// Construct the k-th effective son S' = S \ {s}. The retained old
    /// generators stay minimal in S'; only the bounded candidate set
    /// {2s, 3s} ∪ {s + g} is tested for minimality.
    CSemigroup effective_son(int k) const;

    /// All effective sons.
    std::vector<CSemigroup> effective_sons() const;

    /// n(S): members strictly below the Frobenius element. Counted as
    /// (cone points below Fb) - (genus - 1), every gap but Fb being below
    /// Fb. Requires genus >= 1. An optional counter over the same cone and
    /// order is reused as a cache across calls.
    std::uint64_t sporadic_count(PrecedingCounter* cache = nullptr) const;

    /// Evaluate the extended Wilf inequality; requires genus >= 1.
    WilfRecord wilf_check(PrecedingCounter* cache = nullptr) const;

private:
    CSemigroup(ConePtr cone, OrderPtr order) : cone_(std::move(cone)), order_(std::move(order)) {}

    void recompute_first_eligible();

    ConePtr cone_;
    OrderPtr order_;
    std::vector<LatticePoint> gaps_;
    std::vector<LatticePoint> gens_;
    int first_eligible_ = 0;
};

} // namespace csemi
