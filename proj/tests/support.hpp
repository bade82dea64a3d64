#pragma once

// Seeded generators shared by the property tests.

#include <cstdint>
#include <random>

#include "ybx/linalg.hpp"

namespace ybx::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(long bound = 9) {
    Rational x(integer(-bound, bound), integer(1, bound));
    x.canonicalize();
    return x;
  }

  Rational nonzero_rational(long bound = 9) {
    for (;;) {
      Rational x = rational(bound);
      if (x != 0) return x;
    }
  }

  QPoly poly(int max_degree = 2, long bound = 5) {
    std::vector<Rational> c;
    const int d = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= d; ++i) c.push_back(rational(bound));
    return QPoly(std::move(c));
  }

  RatFun ratfun(int max_degree = 2, long bound = 5) {
    QPoly den;
    while (den.is_zero()) den = poly(max_degree, bound);
    return RatFun::fraction(poly(max_degree, bound), den);
  }

  RatFun nonzero_ratfun(int max_degree = 2, long bound = 5) {
    for (;;) {
      RatFun x = ratfun(max_degree, bound);
      if (!x.is_zero()) return x;
    }
  }

  Matrix rational_matrix(std::size_t rows, std::size_t cols, long bound = 5,
                         double zero_prob = 0.3) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (!coin(zero_prob)) m(r, c) = RatFun(rational(bound));
      }
    }
    return m;
  }

  Matrix ratfun_matrix(std::size_t rows, std::size_t cols, int max_degree = 1,
                       double zero_prob = 0.3) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (!coin(zero_prob)) m(r, c) = ratfun(max_degree, 3);
      }
    }
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ybx::testing
