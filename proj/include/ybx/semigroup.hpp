#pragma once

#include <span>

#include "ybx/quadratic.hpp"

namespace ybx {

// Degree-2 relation space of the quantum semigroup on End(V). Coordinates of
// End(V)^{⊗2} are (a, c, b, d) for e_ac ⊗ e_bd, e_ac the matrix unit of
// End(V) in row-major order.
struct SemigroupPresentation {
  enum class Source { Perp, Commutator };

  std::size_t n = 0;
  Subspace relation_space;  // ambient n^4
  Source source = Source::Perp;
};

const char* to_string(SemigroupPresentation::Source source);

// shuffle_23 of the sum of I_i ⊗ annihilator(I_i).
SemigroupPresentation relations_perp(std::span<const Subspace> eigenspaces);
SemigroupPresentation relations_perp(const Symmetry& sym);

// Image of X -> S X - X S on End(V ⊗ V) ≅ End(V)^{⊗2}.
SemigroupPresentation relations_commutator(const Matrix& s);
SemigroupPresentation relations_commutator(const Symmetry& sym);

// The operator X on V ⊗ V in End(V)^{⊗2} coordinates.
std::vector<RatFun> to_end_coordinates(const Matrix& x);

// Guard defaults to (n^2)^K <= 10000.
HilbertTable semigroup_dims(const SemigroupPresentation& p, std::size_t max_degree,
                            const HilbertOptions& options = {});

}  // namespace ybx
