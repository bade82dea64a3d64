#pragma once

// Exact dense linear algebra over Q(q). Vectors are rows; a Subspace is
// always stored as its unique reduced row-echelon basis, so subspace
// equality is basis equality.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ybx/scalars.hpp"

namespace ybx {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<RatFun>& entries);
  static Matrix from_rows(const std::vector<std::vector<RatFun>>& rows);
  // Matrix unit e_rc.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  RatFun& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RatFun& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<RatFun> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const RatFun> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const RatFun> entries() const noexcept { return data_; }

  bool is_zero() const;
  bool is_constant() const;
  std::size_t nonzeros() const;

  Matrix transpose() const;
  // this - lambda * I
  Matrix shifted(const RatFun& lambda) const;
  // Rows r0.. r0+count-1.
  Matrix row_block(std::size_t r0, std::size_t count) const;
  // Vertical concatenation; column counts must match.
  static Matrix stack(const Matrix& top, const Matrix& bottom);

  // Entrywise value at q = at. Throws Pole.
  Matrix specialized(const Rational& at) const;

  std::vector<RatFun> apply(std::span<const RatFun> v) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const RatFun& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFun> data_;
};

RatFun trace(const Matrix& m);
// trace(a * b) without forming the product.
RatFun trace_of_product(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;  // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Throws Precondition when m is singular.
Matrix inverse(const Matrix& m);

class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  // Row span of `spanning`.
  static Subspace span(const Matrix& spanning);
  static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<RatFun>>& vectors);
  // `basis` must already be in reduced row-echelon form without zero rows.
  static Subspace from_rref(Matrix basis);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }

  bool contains(std::span<const RatFun> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// {x : m x = 0}, a subspace of the column space of dimension m.cols().
Subspace kernel(const Matrix& m);
// Column space of m, i.e. the row space of its transpose.
Subspace image(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(std::span<const Subspace> parts);
Subspace subspace_intersect(std::span<const Subspace> parts);
bool is_direct_sum(std::span<const Subspace> parts);

// Polynomial in an operator variable x with coefficients in Q(q), lowest
// degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<RatFun> coefficients);

  // prod (x - root)
  static Polynomial from_roots(std::span<const RatFun> roots);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const RatFun> coefficients() const noexcept { return coeffs_; }
  const RatFun& coeff(std::size_t i) const { return coeffs_.at(i); }

  RatFun operator()(const RatFun& x) const;
  Matrix operator()(const Matrix& m) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string to_string() const;

 private:
  std::vector<RatFun> coeffs_;
};

// Monic polynomial of least degree annihilating m. Built from Krylov
// sequences of the standard basis vectors.
Polynomial minimal_polynomial(const Matrix& m);

struct LKDecomposition {
  Subspace image_sum;           // L = sum_i Im(B_i - lambda_i)
  Subspace kernel_intersection;  // K = cap_i Ker(B_i - lambda_i)
  bool is_direct = false;
};

LKDecomposition lk_decomposition(std::span<const Matrix> ops, std::span<const RatFun> lambdas);

}  // namespace ybx
