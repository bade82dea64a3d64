#include <cassert>

#include "ybx/linalg.hpp"

namespace ybx {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                    "x" + std::to_string(b.cols()));
  }
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFun(1L);
  return m;
}

Matrix Matrix::diagonal(const std::vector<RatFun>& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<RatFun>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "ragged rows in matrix literal");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c) {
  Matrix m(rows, cols);
  m(r, c) = RatFun(1L);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_constant() const {
  for (const auto& x : data_) {
    if (!x.is_constant()) return false;
  }
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t count = 0;
  for (const auto& x : data_) count += x.is_zero() ? 0 : 1;
  return count;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::shifted(const RatFun& lambda) const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "shift of a non-square matrix");
  Matrix m = *this;
  for (std::size_t i = 0; i < rows_; ++i) m(i, i) -= lambda;
  return m;
}

Matrix Matrix::row_block(std::size_t r0, std::size_t count) const {
  assert(r0 + count <= rows_);
  Matrix m(count, cols_);
  std::copy(data_.begin() + static_cast<long>(r0 * cols_),
            data_.begin() + static_cast<long>((r0 + count) * cols_), m.data_.begin());
  return m;
}

Matrix Matrix::stack(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "stack: column counts differ");
  }
  Matrix m(top.rows() + bottom.rows(), top.cols());
  std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(),
            m.data_.begin() + static_cast<long>(top.data_.size()));
  return m;
}

Matrix Matrix::specialized(const Rational& at) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!data_[i].is_zero()) m.data_[i] = RatFun(specialize(data_[i], at));
  }
  return m;
}

std::vector<RatFun> Matrix::apply(std::span<const RatFun> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "apply: vector length");
  std::vector<RatFun> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    RatFun acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      const RatFun& a = (*this)(r, c);
      if (a.is_zero() || v[c].is_zero()) continue;
      acc += a * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "multiply: " + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
  }
  // Nonzero pattern of b, row by row.
  std::vector<std::vector<std::size_t>> b_nz(b.rows());
  for (std::size_t k = 0; k < b.rows(); ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!b(k, j).is_zero()) b_nz[k].push_back(j);
    }
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const RatFun& aik = a(i, k);
      if (aik.is_zero()) continue;
      const bool unit = aik.is_one();
      for (std::size_t j : b_nz[k]) {
        if (unit) {
          c(i, j) += b(k, j);
        } else {
          c(i, j) += aik * b(k, j);
        }
      }
    }
  }
  return c;
}

Matrix operator*(const RatFun& s, Matrix m) {
  if (s.is_one()) return m;
  for (auto& x : m.data_) {
    if (!x.is_zero()) x *= s;
  }
  return m;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).to_string();
    }
  }
  return out + "]";
}

RatFun trace(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "trace of a non-square matrix");
  RatFun acc;
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
  return acc;
}

RatFun trace_of_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "trace_of_product: shapes");
  }
  RatFun acc;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const RatFun& x = a(i, k);
      if (x.is_zero()) continue;
      const RatFun& y = b(k, i);
      if (y.is_zero()) continue;
      acc += x * y;
    }
  }
  return acc;
}

}  // namespace ybx
