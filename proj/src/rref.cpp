#include <limits>

#include "ybx/linalg.hpp"

namespace ybx {

namespace {

// Gauss-Jordan over Q for matrices whose entries are all constants.
RrefResult rref_rational(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Rational> a(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    const RatFun& x = m.entries()[i];
    if (!x.is_zero()) a[i] = x.constant_value();
  }
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * cols + c]; };

  RrefResult out;
  std::vector<std::size_t> nz;
  Rational t;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    // Smallest nonzero entry by bit size keeps coefficient growth down.
    std::size_t best = rows;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = lead; r < rows; ++r) {
      if (at(r, c) == 0) continue;
      const std::size_t size = mpz_sizeinbase(at(r, c).get_num_mpz_t(), 2) +
                               mpz_sizeinbase(at(r, c).get_den_mpz_t(), 2);
      if (size < best_size) {
        best = r;
        best_size = size;
      }
    }
    if (best == rows) continue;
    if (best != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(best, k), at(lead, k));
    }
    const Rational inv = 1 / at(lead, c);
    nz.clear();
    for (std::size_t k = c; k < cols; ++k) {
      if (at(lead, k) == 0) continue;
      at(lead, k) *= inv;
      nz.push_back(k);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || at(r, c) == 0) continue;
      const Rational f = at(r, c);
      for (std::size_t k : nz) {
        t = f * at(lead, k);
        at(r, k) -= t;
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  out.reduced = Matrix(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    if (a[i] != 0) out.reduced(i / cols, i % cols) = RatFun(std::move(a[i]));
  }
  return out;
}

// Gauss-Jordan over Q(q); the pivot is the entry of least total degree.
RrefResult rref_ratfun(const Matrix& m) {
  RrefResult out;
  out.reduced = m;
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> nz;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t best = rows;
    int best_complexity = std::numeric_limits<int>::max();
    for (std::size_t r = lead; r < rows; ++r) {
      const RatFun& x = a(r, c);
      if (x.is_zero()) continue;
      const int complexity = x.complexity();
      if (complexity < best_complexity) {
        best = r;
        best_complexity = complexity;
        if (complexity == 0) break;
      }
    }
    if (best == rows) continue;
    if (best != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(best, k), a(lead, k));
    }
    const RatFun inv = a(lead, c).inverse();
    nz.clear();
    for (std::size_t k = c; k < cols; ++k) {
      if (a(lead, k).is_zero()) continue;
      if (!inv.is_one()) a(lead, k) *= inv;
      nz.push_back(k);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const RatFun f = a(r, c);
      for (std::size_t k : nz) a(r, k) -= f * a(lead, k);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  return out;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  return m.is_constant() ? rref_rational(m) : rref_ratfun(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

}  // namespace ybx

namespace ybx {

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n + i) = RatFun(1L);
  }
  const RrefResult r = rref(augmented);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) {
    throw Error(ErrorCode::Precondition, "matrix is singular");
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
  }
  return out;
}

}  // namespace ybx
