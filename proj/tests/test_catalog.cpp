#include <catch_amalgamated.hpp>

#include "ybx/catalog.hpp"
#include "ybx/tensor_ops.hpp"

using namespace ybx;

namespace {

const RatFun q = RatFun::q();

Matrix unit(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(n, n);
  m(r, c) = RatFun(1L);
  return m;
}

// flip * R with R = q sum e_ii⊗e_ii + sum_{i!=j} e_ii⊗e_jj + (q - 1/q) sum_{i<j} e_ij⊗e_ji.
Matrix glq_by_formula(std::size_t n) {
  Matrix r(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RatFun c = i == j ? q : RatFun(1L);
      r += c * kron(unit(n, i, i), unit(n, j, j));
      if (i < j) r += (q - q.inverse()) * kron(unit(n, i, j), unit(n, j, i));
    }
  }
  return flip(n) * r;
}

}  // namespace

TEST_CASE("catalog names", "[catalog]") {
  const auto names = catalog_names();
  CHECK(names ==
        std::vector<std::string>{"flip1", "flip2", "flip3", "flip4", "glq2", "glq3", "so3", "nonflat"});
  for (const auto& name : names) {
    const CatalogEntry e = catalog_get(name);
    CHECK(e.name == name);
    CHECK_FALSE(e.description.empty());
    CHECK(e.symmetry.has_value() != e.relation_generators.has_value());
  }
}

TEST_CASE("unknown names", "[catalog]") {
  try {
    (void)catalog_get("nosuch");
    FAIL("expected UnknownName");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownName);
    CHECK(std::string(e.what()).find("nosuch") != std::string::npos);
  }
}

TEST_CASE("permutation entries", "[catalog]") {
  const CatalogEntry e = catalog_get("flip2");
  CHECK(e.kind == CatalogKind::Permutation);
  CHECK(e.n == 2);
  REQUIRE(e.symmetry.has_value());
  CHECK(e.symmetry->matrix.rows() == 4);
  CHECK(e.symmetry->matrix == flip(2));
  CHECK(catalog_get("flip1").symmetry->matrix == Matrix::identity(1));
  CHECK(catalog_get("flip4").symmetry->matrix == flip(4));
}

TEST_CASE("glq entries", "[catalog]") {
  for (std::size_t n : {2u, 3u}) {
    const CatalogEntry e = catalog_get("glq" + std::to_string(n));
    CHECK(e.kind == CatalogKind::Hecke);
    CHECK(e.symmetry->matrix == glq_by_formula(n));
    CHECK(e.symmetry->matrix.specialized(Rational(1)) == flip(n));
    CHECK(check_hecke(e.symmetry->matrix, q, -q.inverse()));
    const std::vector<RatFun> roots = {q, -q.inverse()};
    CHECK(minimal_polynomial(e.symmetry->matrix) == Polynomial::from_roots(roots));
    CHECK(e.symmetry->eigenspaces[0].dim() == n * (n + 1) / 2);
    CHECK(e.symmetry->eigenspaces[1].dim() == n * (n - 1) / 2);
  }
}

TEST_CASE("so3 entry", "[catalog]") {
  const CatalogEntry e = catalog_get("so3");
  CHECK(e.kind == CatalogKind::BirmanWenzl);
  const Matrix& s = e.symmetry->matrix;
  // Classically the flip; the q^2 and q^-4 eigenspaces merge into Sym^2.
  CHECK(s.specialized(Rational(1)) == flip(3));
  // Spectrum rederived from scratch: the minimal polynomial is the cubic with
  // these roots, and the kernels have the expected sizes.
  const RatFun q2 = q * q;
  const std::vector<RatFun> roots = {q2, -q2.inverse(), (q2 * q2).inverse()};
  CHECK(minimal_polynomial(s) == Polynomial::from_roots(roots));
  const std::size_t dims[] = {5, 3, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(kernel(s - roots[i] * Matrix::identity(9)).dim() == dims[i]);
    CHECK(e.symmetry->eigenspaces[i].dim() == dims[i]);
  }
  const BWReport r = check_bw(s, roots[0], roots[1], roots[2]);
  CHECK(r.all_pass());
  CHECK(r.formula_consistent);
  REQUIRE(r.a.has_value());
  REQUIRE(r.b.has_value());
  CHECK(*r.a == r.expected_a());
  CHECK(*r.b == r.expected_b());
}

TEST_CASE("negative entry", "[catalog]") {
  const CatalogEntry e = catalog_get("nonflat");
  CHECK(e.kind == CatalogKind::Negative);
  CHECK_FALSE(e.symmetry.has_value());
  REQUIRE(e.relation_generators.has_value());
  CHECK(*e.relation_generators == nonflat_generators());
  CHECK(rank(*e.relation_generators) == 2);
  CHECK(rank(e.relation_generators->specialized(Rational(1))) == 1);
}
