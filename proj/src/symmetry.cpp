#include "ybx/symmetry.hpp"

#include "ybx/tensor_ops.hpp"

namespace ybx {

const char* to_string(SymmetryKind kind) {
  switch (kind) {
    case SymmetryKind::GenericYB: return "generic-YB";
    case SymmetryKind::Hecke: return "hecke";
    case SymmetryKind::BirmanWenzl: return "birman-wenzl";
  }
  return "generic-YB";
}

SymmetryKind parse_symmetry_kind(const std::string& text) {
  if (text == "generic-YB") return SymmetryKind::GenericYB;
  if (text == "hecke") return SymmetryKind::Hecke;
  if (text == "birman-wenzl") return SymmetryKind::BirmanWenzl;
  throw Error(ErrorCode::Input, "unknown symmetry kind '" + text + "'");
}

const char* to_string(SpectrumFailure failure) {
  switch (failure) {
    case SpectrumFailure::Empty: return "empty-spectrum";
    case SpectrumFailure::Duplicate: return "duplicate-eigenvalues";
    case SpectrumFailure::NotInvertible: return "not-invertible";
    case SpectrumFailure::Incomplete: return "incomplete-spectrum";
    case SpectrumFailure::Annihilation: return "annihilation";
  }
  return "spectrum";
}

std::vector<std::size_t> Symmetry::eigenspace_dims() const {
  std::vector<std::size_t> dims;
  for (const auto& e : eigenspaces) dims.push_back(e.dim());
  return dims;
}

Subspace Symmetry::complement(std::size_t m) const {
  if (m >= eigenspaces.size()) throw Error(ErrorCode::Bounds, "eigenvalue index out of range");
  std::vector<Subspace> others;
  for (std::size_t i = 0; i < eigenspaces.size(); ++i) {
    if (i != m) others.push_back(eigenspaces[i]);
  }
  if (others.empty()) return Subspace(n * n);
  return subspace_sum(others);
}

Symmetry eigen_decompose(const Matrix& s, const std::vector<RatFun>& eigenvalues,
                         SymmetryKind kind) {
  if (!s.is_square()) throw Error(ErrorCode::DimensionMismatch, "symmetry matrix is not square");
  Symmetry sym;
  sym.n = tensor_square_root(s.rows());
  sym.matrix = s;
  sym.kind = kind;
  if (eigenvalues.empty()) throw SpectrumError(SpectrumFailure::Empty, "no eigenvalues declared");
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    if (eigenvalues[i].is_zero()) {
      throw SpectrumError(SpectrumFailure::NotInvertible, "declared eigenvalue 0");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (eigenvalues[i] == eigenvalues[j]) {
        throw SpectrumError(SpectrumFailure::Duplicate, eigenvalues[i].to_string());
      }
    }
  }
  sym.eigenvalues = eigenvalues;
  std::size_t total = 0;
  for (const auto& lambda : eigenvalues) {
    sym.eigenspaces.push_back(kernel(s.shifted(lambda)));
    total += sym.eigenspaces.back().dim();
  }
  if (total != s.rows()) {
    throw SpectrumError(SpectrumFailure::Incomplete,
                        "eigenspace dimensions sum to " + std::to_string(total) + " of " +
                            std::to_string(s.rows()));
  }
  if (!Polynomial::from_roots(eigenvalues)(s).is_zero()) {
    throw SpectrumError(SpectrumFailure::Annihilation, "product of (S - lambda_i) is nonzero");
  }
  return sym;
}

bool check_braid(const Matrix& s) {
  const std::size_t n = tensor_square_root(s.rows());
  const Matrix s1 = place(s, {n, 3, 1});
  const Matrix s2 = place(s, {n, 3, 2});
  const Matrix s1s2 = s1 * s2;
  const Matrix s2s1 = s2 * s1;
  return s1s2 * s1 == s2s1 * s2;
}

bool check_hecke(const Matrix& s, const RatFun& lambda, const RatFun& mu) {
  if (lambda == mu) throw Error(ErrorCode::Precondition, "Hecke eigenvalues must differ");
  if (!check_braid(s)) return false;
  return (s.shifted(lambda) * s.shifted(mu)).is_zero();
}

namespace {

// c with lhs == c * rhs, taking c from the first nonzero entry of rhs in
// row-major order and then verifying the whole identity.
std::optional<RatFun> proportionality(const Matrix& lhs, const Matrix& rhs) {
  const auto r = rhs.entries();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].is_zero()) continue;
    RatFun c = lhs.entries()[i] / r[i];
    if (lhs == c * rhs) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

BWReport check_bw(const Matrix& s, const RatFun& lambda, const RatFun& mu, const RatFun& nu) {
  if (lambda.is_zero() || mu.is_zero() || nu.is_zero()) {
    throw Error(ErrorCode::Precondition, "Birman-Wenzl eigenvalues must be nonzero");
  }
  if (lambda == mu || lambda == nu || mu == nu) {
    throw Error(ErrorCode::Precondition, "Birman-Wenzl eigenvalues must be pairwise distinct");
  }
  const std::size_t n = tensor_square_root(s.rows());
  BWReport report;
  report.lambda = lambda;
  report.mu = mu;
  report.nu = nu;
  report.braid = check_braid(s);
  const Matrix p = s.shifted(lambda) * s.shifted(mu);
  // Three genuine eigenvalues: the cubic annihilates S and no factor is
  // redundant.
  const std::size_t full = s.rows();
  report.cubic = (p * s.shifted(nu)).is_zero() && rank(s.shifted(lambda)) < full &&
                 rank(s.shifted(mu)) < full && rank(s.shifted(nu)) < full;

  const Matrix p1 = place(p, {n, 3, 1});
  const Matrix p2 = place(p, {n, 3, 2});
  const Matrix s2 = place(s, {n, 3, 2});
  report.a = proportionality(p1 * s2 * p1, p1);
  report.b = proportionality(p1 * p2 * p1, p1);
  report.contraction_a = report.a.has_value();
  report.contraction_b = report.b.has_value();
  report.formula_consistent = report.a && report.b && *report.a == report.expected_a() &&
                              *report.b == report.expected_b();
  return report;
}

}  // namespace ybx
