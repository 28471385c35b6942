#pragma once

#include <cstdint>
#include <vector>

#include "csemi/semigroup.hpp"

namespace csemi {

// Closed-form constructors for the explicit semigroup families used in the
// embedding-dimension and Wilf experiments. Gap sets and generator sets are
// assembled directly from the set descriptions (not by walking the tree), so
// tests can compare them against the incremental machinery.

/// N^p-semigroup with genus h and embedding dimension 2p: the orthant minus
/// the chain e_i, e_i + e_k, ..., e_i + (h-1) e_k. Indices i, k are 1-based,
/// i != k; h >= 1 (h = 0 would be the root).
CSemigroup build_easy_2p(int p, std::int64_t h, int i, int k, OrderPtr order);

/// N^p minus the axis run e_j, 2 e_j, ..., (q-1) e_j; genus q-1 and
/// embedding dimension p*q. j is 1-based; q = 1 gives the root.
CSemigroup build_axis_gaps(int p, std::int64_t q, int j, OrderPtr order);

/// N^p minus { x : x_1 a gap of <l1, l2>, x_i < q_i for i >= 2 }. The gap
/// count is genus(<l1,l2>) * prod(q_i) and the Frobenius element is
/// F(l1,l2) e_1 + sum (q_i - 1) e_i for every admissible order. q has p-1
/// positive entries.
CSemigroup build_two_gen_box(int p, std::int64_t l1, std::int64_t l2,
                             const std::vector<std::int64_t>& q, OrderPtr order);

/// Inside the cone spanned by (1,0) and (1,1): the diagonal <(1,1)> plus
/// everything outside the box [0,b] x [0,a], for 0 <= a < b. Embedding
/// dimension 2b+2, genus (1+a)(2b-a)/2, Frobenius element (b,a).
CSemigroup build_cone_strip(std::int64_t a, std::int64_t b, OrderPtr order);

/// The numerical semigroup <a, b> as a 1-dimensional semigroup, for coprime
/// a, b >= 2.
CSemigroup build_two_gen_numerical(std::int64_t a, std::int64_t b, OrderPtr order);

/// The numerical semigroup {0} ∪ [b+1, ∞), generated by b+1, ..., 2b+1.
CSemigroup build_interval(std::int64_t b, OrderPtr order);

/// Frobenius number a*b - a - b of <a, b>, coprime a, b >= 2.
std::int64_t two_gen_frobenius(std::int64_t a, std::int64_t b);

/// Genus (a*b - a - b + 1) / 2 of <a, b>.
std::int64_t two_gen_genus(std::int64_t a, std::int64_t b);

/// Minimal generators {b+1, ..., 2b+1} of {0} ∪ [b+1, ∞).
std::vector<std::int64_t> interval_gens(std::int64_t b);

/// Whether the minimal generating set of an orthant semigroup with e = 2p
/// matches the template {units except e_i, l1 e_i, l2 e_i} ∪
/// {e_i + q_j e_j : j != i} with l1, l2 coprime. Throws NotOrthantConeError
/// when the cone is not N^p; returns false when e(S) != 2p or S is the root.
bool check_mult_2p_shape(const CSemigroup& s);

} // namespace csemi
