#include <cassert>

#include "ybx/linalg.hpp"

namespace ybx {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + ": ambient dimensions " + std::to_string(a.ambient_dim()) +
                    " and " + std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::full(std::size_t ambient_dim) {
  return from_rref(Matrix::identity(ambient_dim));
}

Subspace Subspace::span(const Matrix& spanning) {
  RrefResult r = rref(spanning);
  Subspace s(spanning.cols());
  s.basis_ = r.reduced.row_block(0, r.rank);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<std::vector<RatFun>>& vectors) {
  if (vectors.empty()) return Subspace(ambient_dim);
  Matrix m = Matrix::from_rows(vectors);
  if (m.cols() != ambient_dim) {
    throw Error(ErrorCode::DimensionMismatch, "span: vector length differs from ambient");
  }
  return span(m);
}

Subspace Subspace::from_rref(Matrix basis) {
  Subspace s(basis.cols());
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::size_t c = 0;
    while (c < basis.cols() && basis(r, c).is_zero()) ++c;
    assert(c < basis.cols() && basis(r, c).is_one());
    assert(s.pivots_.empty() || s.pivots_.back() < c);
    s.pivots_.push_back(c);
  }
  s.basis_ = std::move(basis);
  return s;
}

bool Subspace::contains(std::span<const RatFun> v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "contains: vector length");
  std::vector<RatFun> w(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const RatFun f = w[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = pivots_[i]; c < ambient_; ++c) {
      const RatFun& b = basis_(i, c);
      if (!b.is_zero()) w[c] -= f * b;
    }
  }
  for (const auto& x : w) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "contains");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis().row(r))) return false;
  }
  return true;
}

Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  Matrix basis(n - r.rank, n);
  std::size_t row = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(row, f) = RatFun(1L);
    for (std::size_t i = 0; i < r.rank; ++i) {
      const RatFun& x = r.reduced(i, f);
      if (!x.is_zero()) basis(row, r.pivots[i]) = -x;
    }
    ++row;
  }
  return Subspace::span(basis);
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_sum");
  if (a.is_zero() || b.is_full()) return b;
  if (b.is_zero() || a.is_full()) return a;
  return Subspace::span(Matrix::stack(a.basis(), b.basis()));
}

// Zassenhaus: row-reduce [A | A ; B | 0]; rows whose left half vanishes
// carry a basis of the intersection in their right half.
Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_intersect");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_full()) return a;
  if (b.is_zero() || a.is_full()) return b;
  Matrix z(a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      z(r, c) = a.basis()(r, c);
      z(r, n + c) = a.basis()(r, c);
    }
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) z(a.dim() + r, c) = b.basis()(r, c);
  }
  const RrefResult red = rref(z);
  std::vector<std::vector<RatFun>> rows;
  for (std::size_t i = 0; i < red.rank; ++i) {
    if (red.pivots[i] < n) continue;
    const auto row = red.reduced.row(i);
    rows.emplace_back(row.begin() + static_cast<long>(n), row.end());
  }
  return Subspace::span(n, rows);
}

Subspace subspace_sum(std::span<const Subspace> parts) {
  if (parts.empty()) throw Error(ErrorCode::Precondition, "subspace_sum of an empty list");
  Matrix stacked(0, parts.front().ambient_dim());
  for (const auto& p : parts) {
    require_same_ambient(parts.front(), p, "subspace_sum");
    stacked = Matrix::stack(stacked, p.basis());
  }
  return Subspace::span(stacked);
}

Subspace subspace_intersect(std::span<const Subspace> parts) {
  if (parts.empty()) throw Error(ErrorCode::Precondition, "subspace_intersect of an empty list");
  Subspace acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = subspace_intersect(acc, parts[i]);
  return acc;
}

bool is_direct_sum(std::span<const Subspace> parts) {
  if (parts.empty()) return false;
  std::size_t total = 0;
  for (const auto& p : parts) {
    require_same_ambient(parts.front(), p, "is_direct_sum");
    total += p.dim();
  }
  const std::size_t ambient = parts.front().ambient_dim();
  if (total != ambient) return false;
  return subspace_sum(parts).dim() == ambient;
}

LKDecomposition lk_decomposition(std::span<const Matrix> ops, std::span<const RatFun> lambdas) {
  if (ops.empty() || ops.size() != lambdas.size()) {
    throw Error(ErrorCode::DimensionMismatch, "lk_decomposition: operator and eigenvalue counts");
  }
  const std::size_t n = ops.front().rows();
  std::vector<Subspace> images;
  std::vector<Subspace> kernels;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (!ops[i].is_square() || ops[i].rows() != n) {
      throw Error(ErrorCode::DimensionMismatch, "lk_decomposition: operator sizes");
    }
    const Matrix shifted = ops[i].shifted(lambdas[i]);
    images.push_back(image(shifted));
    kernels.push_back(kernel(shifted));
  }
  LKDecomposition out;
  out.image_sum = subspace_sum(images);
  out.kernel_intersection = subspace_intersect(kernels);
  out.is_direct = out.image_sum.dim() + out.kernel_intersection.dim() == n &&
                  subspace_intersect(out.image_sum, out.kernel_intersection).is_zero();
  return out;
}

}  // namespace ybx
