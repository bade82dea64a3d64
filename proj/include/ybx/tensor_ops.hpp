#pragma once

// Tensor-space bookkeeping. The basis of V^{⊗k} is indexed
// lexicographically by (i_1, ..., i_k) with the first factor most
// significant, everywhere in the library.

#include <cstddef>

#include "ybx/linalg.hpp"

namespace ybx {

// n^k, throwing Bounds on overflow.
std::size_t checked_pow(std::size_t n, std::size_t k);
// n with n*n == square, or Bounds.
std::size_t tensor_square_root(std::size_t square);

struct PlacementSpec {
  std::size_t n = 0;  // dim V
  std::size_t k = 0;  // tensor power
  std::size_t i = 0;  // 1 <= i <= k-1; the operator acts on slots i, i+1
};

Matrix kron(const Matrix& a, const Matrix& b);

// s acting on slots (i, i+1) of V^{⊗k}, identity elsewhere.
Matrix place(const Matrix& s, const PlacementSpec& spec);

// sigma(u ⊗ v) = v ⊗ u on V ⊗ V.
Matrix flip(std::size_t n);

// Functionals vanishing on x, in dual-basis coordinates.
Subspace annihilator(const Subspace& x);

// span{a ⊗ b}; the Kronecker product of two RREF bases is again RREF.
Subspace tensor_subspace(const Subspace& a, const Subspace& b);

// Image of x under op (op applied to each basis vector).
Subspace apply(const Matrix& op, const Subspace& x);

// One degree step of the iterations below: given X^{m-1} (ambient n^{m-1})
// and the degree-2 subspace s, returns X^{m-1} ⊗ V combined with
// V^{⊗(m-2)} ⊗ s.
Subspace extend_iterated_sum(const Subspace& previous, const Subspace& s);
Subspace extend_iterated_intersection(const Subspace& previous, const Subspace& s);

// J^k = sum_i V^{⊗(i-1)} ⊗ J ⊗ V^{⊗(k-i-1)} for J in V ⊗ V.
Subspace iterated_sum(const Subspace& j, std::size_t k);
// I^(k) = intersection of the same placements.
Subspace iterated_intersection(const Subspace& i, std::size_t k);

// V ⊗ V ⊗ V* ⊗ V* -> V ⊗ V* ⊗ V ⊗ V*, (a, b, c, d) -> (a, c, b, d).
// The map is an involution on index 4-tuples.
Matrix shuffle_23(std::size_t n);

// Braid lift of the transposition of two blocks V^{⊗m}, as the product of
// placed copies of s along (s_m ... s_1)(s_{m+1} ... s_2)...(s_{2m-1} ... s_m).
Matrix cable_symmetry(const Matrix& s, std::size_t m);

}  // namespace ybx
