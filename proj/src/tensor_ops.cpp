#include "ybx/tensor_ops.hpp"

#include <limits>

namespace ybx {

std::size_t checked_pow(std::size_t n, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && out > std::numeric_limits<std::size_t>::max() / n) {
      throw Error(ErrorCode::Bounds, "tensor dimension overflows");
    }
    out *= n;
  }
  return out;
}

std::size_t tensor_square_root(std::size_t square) {
  std::size_t n = 0;
  while (n * n < square) ++n;
  if (n * n != square) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension " + std::to_string(square) + " is not n^2 for any n");
  }
  return n;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const RatFun& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const RatFun& y = b(k, l);
          if (y.is_zero()) continue;
          out(i * b.rows() + k, j * b.cols() + l) = x.is_one() ? y : x * y;
        }
      }
    }
  }
  return out;
}

Matrix place(const Matrix& s, const PlacementSpec& spec) {
  if (spec.n == 0 || spec.k < 2 || spec.i < 1 || spec.i > spec.k - 1) {
    throw Error(ErrorCode::Bounds, "placement (n=" + std::to_string(spec.n) +
                                       ", k=" + std::to_string(spec.k) +
                                       ", i=" + std::to_string(spec.i) + ") out of range");
  }
  const std::size_t pair = spec.n * spec.n;
  if (s.rows() != pair || s.cols() != pair) {
    throw Error(ErrorCode::DimensionMismatch, "place: operator is not on V ⊗ V");
  }
  const std::size_t left = checked_pow(spec.n, spec.i - 1);
  const std::size_t right = checked_pow(spec.n, spec.k - spec.i - 1);
  const std::size_t total = left * pair * right;
  Matrix out(total, total);
  for (std::size_t y_out = 0; y_out < pair; ++y_out) {
    for (std::size_t y_in = 0; y_in < pair; ++y_in) {
      const RatFun& v = s(y_out, y_in);
      if (v.is_zero()) continue;
      for (std::size_t x = 0; x < left; ++x) {
        for (std::size_t z = 0; z < right; ++z) {
          out((x * pair + y_out) * right + z, (x * pair + y_in) * right + z) = v;
        }
      }
    }
  }
  return out;
}

Matrix flip(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::Bounds, "flip: n must be positive");
  Matrix out(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out(b * n + a, a * n + b) = RatFun(1L);
  }
  return out;
}

Subspace annihilator(const Subspace& x) { return kernel(x.basis()); }

Subspace tensor_subspace(const Subspace& a, const Subspace& b) {
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_dim() * b.ambient_dim());
  return Subspace::from_rref(kron(a.basis(), b.basis()));
}

Subspace apply(const Matrix& op, const Subspace& x) {
  if (op.cols() != x.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "apply: shapes");
  if (x.is_zero()) return Subspace(op.rows());
  return Subspace::span(x.basis() * op.transpose());
}

namespace {

std::pair<Subspace, Subspace> placement_pair(const Subspace& previous, const Subspace& s) {
  const std::size_t n = tensor_square_root(s.ambient_dim());
  if (previous.ambient_dim() % n != 0) {
    throw Error(ErrorCode::DimensionMismatch, "iterated placement: ambient mismatch");
  }
  // Slots 1..m-2 come from previous ⊗ V, slot m-1 from V^{⊗(m-2)} ⊗ s.
  return {tensor_subspace(previous, Subspace::full(n)),
          tensor_subspace(Subspace::full(previous.ambient_dim() / n), s)};
}

void require_degree(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::Bounds, "tensor degree must be at least 2");
}

}  // namespace

Subspace extend_iterated_sum(const Subspace& previous, const Subspace& s) {
  auto [left, right] = placement_pair(previous, s);
  return subspace_sum(left, right);
}

Subspace extend_iterated_intersection(const Subspace& previous, const Subspace& s) {
  auto [left, right] = placement_pair(previous, s);
  return subspace_intersect(left, right);
}

Subspace iterated_sum(const Subspace& j, std::size_t k) {
  require_degree(k);
  Subspace acc = j;
  for (std::size_t m = 3; m <= k; ++m) acc = extend_iterated_sum(acc, j);
  return acc;
}

Subspace iterated_intersection(const Subspace& i, std::size_t k) {
  require_degree(k);
  Subspace acc = i;
  for (std::size_t m = 3; m <= k; ++m) acc = extend_iterated_intersection(acc, i);
  return acc;
}

Matrix shuffle_23(std::size_t n) {
  const std::size_t total = checked_pow(n, 4);
  Matrix out(total, total);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          out(((a * n + c) * n + b) * n + d, ((a * n + b) * n + c) * n + d) = RatFun(1L);
        }
      }
    }
  }
  return out;
}

Matrix cable_symmetry(const Matrix& s, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::Bounds, "cable_symmetry: block size must be positive");
  if (m == 1) return s;
  const std::size_t n = tensor_square_root(s.rows());
  const std::size_t k = 2 * m;
  Matrix out = Matrix::identity(checked_pow(n, k));
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t i = m + t; i >= 1 + t; --i) {
      out = out * place(s, {n, k, i});
    }
  }
  return out;
}

}  // namespace ybx
