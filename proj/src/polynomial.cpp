#include "ybx/linalg.hpp"

namespace ybx {

Polynomial::Polynomial(std::vector<RatFun> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(std::span<const RatFun> roots) {
  Polynomial p(std::vector<RatFun>{RatFun(1L)});
  for (const auto& r : roots) p = p * Polynomial(std::vector<RatFun>{-r, RatFun(1L)});
  return p;
}

RatFun Polynomial::operator()(const RatFun& x) const {
  RatFun acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "polynomial of a non-square matrix");
  Matrix acc(m.rows(), m.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<RatFun> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const RatFun& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string power = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (i == 0) {
      out += "(" + c.to_string() + ")";
    } else if (c.is_one()) {
      out += power;
    } else {
      out += "(" + c.to_string() + ")*" + power;
    }
  }
  return out;
}

namespace {

std::vector<RatFun> evaluate_on(const Polynomial& p, const Matrix& m, std::span<const RatFun> v) {
  std::vector<RatFun> acc(v.size());
  const auto coeffs = p.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = m.apply(acc);
    if (coeffs[i].is_zero()) continue;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_zero()) acc[k] += coeffs[i] * v[k];
    }
  }
  return acc;
}

bool is_zero_vector(std::span<const RatFun> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

// Monic generator of {p : p(m) w = 0}: the first linear dependency in
// w, m w, m^2 w, ...
Polynomial local_annihilator(const Matrix& m, std::vector<RatFun> w) {
  std::vector<std::vector<RatFun>> krylov;
  krylov.push_back(std::move(w));
  std::size_t current_rank = 1;
  for (;;) {
    krylov.push_back(m.apply(krylov.back()));
    const std::size_t r = rank(Matrix::from_rows(krylov));
    if (r == current_rank) break;
    current_rank = r;
  }
  // Coefficients c with sum_i c_i m^i w = 0 span the kernel of K^T.
  const Subspace relation = kernel(Matrix::from_rows(krylov).transpose());
  const auto row = relation.basis().row(0);
  std::vector<RatFun> coeffs(row.begin(), row.end());
  const RatFun lead = coeffs.back().inverse();
  for (auto& c : coeffs) c *= lead;
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "minimal_polynomial: non-square");
  const std::size_t n = m.rows();
  Polynomial p(std::vector<RatFun>{RatFun(1L)});
  // p <- p * ann(p(m) e_j) equals lcm(p, ann(e_j)).
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<RatFun> e(n);
    e[j] = RatFun(1L);
    std::vector<RatFun> w = evaluate_on(p, m, e);
    if (is_zero_vector(w)) continue;
    p = p * local_annihilator(m, std::move(w));
  }
  return p;
}

}  // namespace ybx
