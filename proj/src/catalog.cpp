#include "ybx/catalog.hpp"

#include <array>

#include "ybx/tensor_ops.hpp"

namespace ybx {

const char* to_string(CatalogKind kind) {
  switch (kind) {
    case CatalogKind::Permutation: return "permutation";
    case CatalogKind::Hecke: return "hecke";
    case CatalogKind::BirmanWenzl: return "birman-wenzl";
    case CatalogKind::Negative: return "negative";
  }
  return "negative";
}

namespace {

// e_ij ⊗ e_kl on V ⊗ V.
Matrix unit_pair(std::size_t n, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  return kron(Matrix::unit(n, n, i, j), Matrix::unit(n, n, k, l));
}

RatFun q_pow(std::int64_t e) { return RatFun::q().pow(e); }

}  // namespace

Matrix glq_matrix(std::size_t n) {
  const RatFun q = RatFun::q();
  Matrix r(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r += (i == j ? q : RatFun(1L)) * unit_pair(n, i, i, j, j);
      if (i < j) r += (q - q.inverse()) * unit_pair(n, i, j, j, i);
    }
  }
  return flip(n) * r;
}

// Orthogonal R-matrix of so(3) on its vector representation, written in
// t = q^2 so that every entry stays in Q(q). Index i pairs with i' = 2 - i.
Matrix so3_matrix() {
  constexpr std::size_t n = 3;
  constexpr std::array<std::int64_t, n> two_rho = {1, 0, -1};
  const RatFun t = q_pow(2);
  const RatFun gap = t - t.inverse();
  auto prime = [](std::size_t i) { return n - 1 - i; };
  Matrix r(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RatFun diag(1L);
      if (i == j && i != prime(i)) diag = t;
      if (i != j && j == prime(i)) diag = t.inverse();
      r += diag * unit_pair(n, i, i, j, j);
      if (i > j) {
        r += gap * unit_pair(n, i, j, j, i);
        r -= (gap * q_pow(two_rho[i] - two_rho[j])) * unit_pair(n, i, j, prime(i), prime(j));
      }
    }
  }
  return flip(n) * r;
}

Matrix nonflat_generators() {
  const RatFun q = RatFun::q();
  return Matrix::from_rows({{0L, 1L, -1L, 0L}, {0L, 1L, -q, 0L}});
}

std::vector<std::string> catalog_names() {
  return {"flip1", "flip2", "flip3", "flip4", "glq2", "glq3", "so3", "nonflat"};
}

namespace {

void require(bool ok, const std::string& name, const std::string& what) {
  if (!ok) throw Error(ErrorCode::Precondition, "catalog entry " + name + " fails " + what);
}

CatalogEntry symmetry_entry(std::string name, std::string description, CatalogKind kind,
                            const Matrix& s, std::vector<RatFun> eigenvalues) {
  CatalogEntry entry;
  entry.name = std::move(name);
  entry.description = std::move(description);
  entry.kind = kind;
  SymmetryKind sym_kind = SymmetryKind::GenericYB;
  if (eigenvalues.size() == 2) sym_kind = SymmetryKind::Hecke;
  if (kind == CatalogKind::BirmanWenzl) sym_kind = SymmetryKind::BirmanWenzl;

  require(check_braid(s), entry.name, "the braid relation");
  entry.symmetry = eigen_decompose(s, eigenvalues, sym_kind);
  entry.n = entry.symmetry->n;
  if (sym_kind == SymmetryKind::Hecke) {
    require(check_hecke(s, eigenvalues[0], eigenvalues[1]), entry.name, "the Hecke relation");
  }
  if (sym_kind == SymmetryKind::BirmanWenzl) {
    const BWReport bw = check_bw(s, eigenvalues[0], eigenvalues[1], eigenvalues[2]);
    require(bw.all_pass() && bw.formula_consistent, entry.name, "the Birman-Wenzl axioms");
  }
  return entry;
}

}  // namespace

CatalogEntry catalog_get(const std::string& name) {
  const RatFun q = RatFun::q();
  if (name.size() == 5 && name.starts_with("flip") && name[4] >= '1' && name[4] <= '4') {
    const std::size_t n = static_cast<std::size_t>(name[4] - '0');
    std::vector<RatFun> spectrum = {RatFun(1L)};
    if (n >= 2) spectrum.push_back(RatFun(-1L));
    return symmetry_entry(name, "flip u⊗v -> v⊗u, n = " + std::to_string(n),
                          CatalogKind::Permutation, flip(n), spectrum);
  }
  if (name == "glq2" || name == "glq3") {
    const std::size_t n = name == "glq2" ? 2 : 3;
    return symmetry_entry(name, "GL_q(" + std::to_string(n) + ") R-matrix composed with the flip",
                          CatalogKind::Hecke, glq_matrix(n), {q, -q.inverse()});
  }
  if (name == "so3") {
    return symmetry_entry(name, "SO_q(3) R-matrix composed with the flip",
                          CatalogKind::BirmanWenzl, so3_matrix(),
                          {q_pow(2), -q_pow(-2), q_pow(-4)});
  }
  if (name == "nonflat") {
    CatalogEntry entry;
    entry.name = name;
    entry.description = "span{e12 - e21, e12 - q e21}: rank drops at q = 1";
    entry.n = 2;
    entry.kind = CatalogKind::Negative;
    entry.relation_generators = nonflat_generators();
    return entry;
  }
  throw Error(ErrorCode::UnknownName, "unknown catalog entry '" + name + "'");
}

}  // namespace ybx
