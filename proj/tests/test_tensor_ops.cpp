#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "support.hpp"
#include "ybx/catalog.hpp"
#include "ybx/symmetry.hpp"
#include "ybx/tensor_ops.hpp"

using namespace ybx;
using ybx::testing::Gen;

namespace {

const RatFun q = RatFun::q();
const RatFun one(1L);

std::vector<RatFun> basis_tensor(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::size_t pos = 0;
  for (auto i : idx) pos = pos * n + i;
  std::vector<RatFun> v(checked_pow(n, idx.size()));
  v[pos] = one;
  return v;
}

Subspace symmetric_part(std::size_t n) { return kernel(flip(n) - Matrix::identity(n * n)); }
Subspace antisymmetric_part(std::size_t n) { return kernel(flip(n) + Matrix::identity(n * n)); }

Subspace random_subspace(Gen& gen, std::size_t n, bool symbolic) {
  const auto d = static_cast<std::size_t>(gen.integer(0, n));
  return Subspace::span(symbolic ? gen.ratfun_matrix(d, n) : gen.rational_matrix(d, n));
}

}  // namespace

TEST_CASE("kron examples", "[tensor]") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  const RatFun a(2L), b = q, c(5L), d = q * q;
  CHECK(kron(Matrix::diagonal({a, b}), Matrix::diagonal({c, d})) ==
        Matrix::diagonal({a * c, a * d, b * c, b * d}));
  const Matrix op = kron(Matrix::unit(2, 2, 0, 1), Matrix::unit(2, 2, 1, 0));
  CHECK(op.apply(basis_tensor(2, {1, 0})) == basis_tensor(2, {0, 1}));
}

TEST_CASE("kron is associative", "[tensor][property]") {
  Gen gen(0xAB);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = gen.ratfun_matrix(2, 2), b = gen.rational_matrix(2, 3), c = gen.ratfun_matrix(2, 1);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  }
}

TEST_CASE("placement", "[tensor]") {
  const Matrix s1 = place(flip(2), {2, 3, 1});
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        CHECK(s1.apply(basis_tensor(2, {a, b, c})) == basis_tensor(2, {b, a, c}));

  const Matrix g = glq_matrix(2);
  const std::vector<RatFun> roots = {q, -q.inverse()};
  CHECK(minimal_polynomial(place(g, {2, 3, 2})) == Polynomial::from_roots(roots));

  CHECK_THROWS_AS(place(g, {2, 3, 0}), Error);
  CHECK_THROWS_AS(place(g, {2, 3, 3}), Error);
  CHECK_THROWS_AS(place(g, {3, 3, 1}), Error);
}

TEST_CASE("far placements commute", "[tensor][property]") {
  Gen gen(0xFA2);
  for (int trial = 0; trial < 6; ++trial) {
    const Matrix s = gen.ratfun_matrix(4, 4, 1, 0.5);
    const Matrix t = gen.rational_matrix(4, 4);
    const std::size_t k = 4 + static_cast<std::size_t>(trial % 2);
    for (std::size_t i = 1; i < k; ++i) {
      for (std::size_t j = i + 2; j < k; ++j) {
        const Matrix a = place(s, {2, k, i}), b = place(t, {2, k, j});
        CHECK(a * b == b * a);
      }
    }
  }
}

TEST_CASE("placement agrees with Kronecker identities", "[tensor][property]") {
  Gen gen(0x91AC);
  const Matrix s = gen.rational_matrix(9, 9);
  const auto os = oracle::specialize(s, 0);
  for (std::size_t i = 1; i <= 2; ++i) {
    CHECK(oracle::specialize(place(s, {3, 3, i}), 0) == oracle::placed(os, 3, 3, i));
  }
}

TEST_CASE("flip", "[tensor]") {
  CHECK(flip(1) == Matrix::identity(1));
  const Matrix f = flip(2);
  CHECK(f.apply(basis_tensor(2, {0, 0})) == basis_tensor(2, {0, 0}));
  CHECK(f.apply(basis_tensor(2, {1, 1})) == basis_tensor(2, {1, 1}));
  CHECK(f.apply(basis_tensor(2, {0, 1})) == basis_tensor(2, {1, 0}));
  for (std::size_t n = 1; n <= 4; ++n) CHECK(flip(n) * flip(n) == Matrix::identity(n * n));
}

TEST_CASE("annihilator", "[tensor]") {
  CHECK(annihilator(Subspace(3)).is_full());
  CHECK(annihilator(Subspace::full(3)).is_zero());
  CHECK(annihilator(Subspace::span(2, {{one, one}})) == Subspace::span(2, {{one, -one}}));
}

TEST_CASE("annihilator is an involution", "[tensor][property]") {
  Gen gen(0x1417);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 7));
    const Subspace x = random_subspace(gen, n, trial % 3 == 0);
    const Subspace ann = annihilator(x);
    CHECK(ann.dim() + x.dim() == n);
    CHECK(annihilator(ann) == x);
  }
}

TEST_CASE("duality of sums and intersections", "[tensor][property]") {
  Gen gen(0xD0A1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(2, 7));
    const bool symbolic = trial % 4 == 0;
    const Subspace l = random_subspace(gen, n, symbolic);
    const Subspace m = random_subspace(gen, n, symbolic);
    CHECK(annihilator(subspace_sum(l, m)) == subspace_intersect(annihilator(l), annihilator(m)));
    CHECK(annihilator(subspace_intersect(l, m)) == subspace_sum(annihilator(l), annihilator(m)));
  }
}

TEST_CASE("iterated sums and intersections", "[tensor]") {
  const Subspace anti = antisymmetric_part(2);
  const Subspace sym = symmetric_part(2);
  CHECK(iterated_sum(anti, 2) == anti);
  CHECK(iterated_intersection(sym, 2) == sym);
  CHECK(iterated_sum(anti, 3).dim() == 4);
  CHECK(iterated_intersection(sym, 3).dim() == 4);
  CHECK(iterated_sum(Subspace::full(4), 3).is_full());
  CHECK(iterated_intersection(Subspace(4), 4).is_zero());
  CHECK_THROWS_AS(iterated_sum(anti, 1), Error);
}

TEST_CASE("iterated constructions match the brute-force oracle", "[tensor][property]") {
  Gen gen(0x17E2);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = trial % 3 == 0 ? 3 : 2;
    const std::size_t k = n == 3 ? 3 : 4;
    const Subspace j = Subspace::span(gen.rational_matrix(gen.integer(1, n * n - 1), n * n));
    const auto oj = oracle::specialize(j.basis(), 0);
    CHECK(iterated_sum(j, k).dim() == oracle::sum_dim(oj, n, k));
    CHECK(iterated_intersection(j, k).dim() == oracle::intersection_dim(oj, n, k));
  }
}

TEST_CASE("shuffle", "[tensor]") {
  const Matrix s = shuffle_23(2);
  CHECK(s.rows() == 16);
  for (std::size_t r = 0; r < 16; ++r) {
    std::size_t ones = 0;
    for (std::size_t c = 0; c < 16; ++c) ones += s(r, c).is_one() ? 1 : 0;
    CHECK(ones == 1);
  }
  CHECK(s * s == Matrix::identity(16));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d)
          CHECK(s.apply(basis_tensor(2, {a, b, c, d})) == basis_tensor(2, {a, c, b, d}));
  // Decomposable tensors: (u ⊗ v ⊗ f ⊗ g) -> (u ⊗ f ⊗ v ⊗ g).
  Gen gen(0x5AF);
  auto vec = [&] { return gen.rational_matrix(2, 1); };
  const Matrix u = vec(), v = vec(), f = vec(), g = vec();
  const Matrix before = kron(kron(u, v), kron(f, g));
  const Matrix after = kron(kron(u, f), kron(v, g));
  CHECK(s * before == after);
}

TEST_CASE("cabling", "[tensor]") {
  const Matrix g = glq_matrix(2);
  CHECK(cable_symmetry(g, 1) == g);
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      // Cabling the flip exchanges the blocks.
      CHECK(cable_symmetry(flip(n), m) == flip(checked_pow(n, m)));
    }
  }
  const Matrix c = cable_symmetry(g, 2);
  CHECK(c.rows() == 16);
  CHECK(check_braid(c));
}
