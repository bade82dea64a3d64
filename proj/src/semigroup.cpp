#include "ybx/semigroup.hpp"

#include "ybx/tensor_ops.hpp"

namespace ybx {

const char* to_string(SemigroupPresentation::Source source) {
  return source == SemigroupPresentation::Source::Perp ? "perp" : "commutator";
}

SemigroupPresentation relations_perp(std::span<const Subspace> eigenspaces) {
  if (eigenspaces.empty()) throw Error(ErrorCode::Precondition, "no eigenspaces");
  const std::size_t pair = eigenspaces.front().ambient_dim();
  const std::size_t n = tensor_square_root(pair);
  std::vector<Subspace> parts;
  for (const auto& i : eigenspaces) {
    if (i.ambient_dim() != pair) throw Error(ErrorCode::DimensionMismatch, "eigenspace ambient");
    parts.push_back(tensor_subspace(i, annihilator(i)));
  }
  return {n, apply(shuffle_23(n), subspace_sum(parts)), SemigroupPresentation::Source::Perp};
}

SemigroupPresentation relations_perp(const Symmetry& sym) {
  return relations_perp(sym.eigenspaces);
}

std::vector<RatFun> to_end_coordinates(const Matrix& x) {
  const std::size_t n = tensor_square_root(x.rows());
  std::vector<RatFun> out(x.rows() * x.cols());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          out[((a * n + c) * n + b) * n + d] = x(a * n + b, c * n + d);
        }
      }
    }
  }
  return out;
}

SemigroupPresentation relations_commutator(const Matrix& s) {
  const std::size_t n = tensor_square_root(s.rows());
  const std::size_t pair = n * n;
  std::vector<std::vector<RatFun>> images;
  for (std::size_t r = 0; r < pair; ++r) {
    for (std::size_t c = 0; c < pair; ++c) {
      const Matrix e = Matrix::unit(pair, pair, r, c);
      images.push_back(to_end_coordinates(s * e - e * s));
    }
  }
  return {n, Subspace::span(pair * pair, images), SemigroupPresentation::Source::Commutator};
}

SemigroupPresentation relations_commutator(const Symmetry& sym) {
  return relations_commutator(sym.matrix);
}

HilbertTable semigroup_dims(const SemigroupPresentation& p, std::size_t max_degree,
                            const HilbertOptions& options) {
  return hilbert_dims(p.relation_space, max_degree, options);
}

}  // namespace ybx
