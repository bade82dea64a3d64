#pragma once

// Exact scalars: rationals (GMP) and the rational-function field Q(q).

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybx/error.hpp"

namespace ybx {

using Rational = mpq_class;

std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);

// Univariate polynomial in q with rational coefficients. Coefficients are
// stored lowest degree first with no trailing zeros; the zero polynomial is
// the empty vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Rational constant);
  explicit QPoly(std::vector<Rational> coefficients);

  static QPoly monomial(Rational coefficient, std::size_t degree);
  static QPoly variable() { return monomial(Rational(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  // c * q^k, c != 0
  bool is_monomial() const noexcept;

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  // Largest k with q^k dividing this; 0 for the zero polynomial.
  std::size_t low_degree() const noexcept;
  // Multiplicity of the root `at`; 0 for the zero polynomial.
  std::size_t multiplicity_at(const Rational& at) const;

  Rational operator()(const Rational& at) const;

  QPoly scaled(const Rational& factor) const;
  QPoly monic() const;
  Rational content() const;  // positive gcd of numerators / lcm of denominators
  QPoly shifted_down(std::size_t k) const;  // exact division by q^k
  QPoly divided_by_root(const Rational& at) const;  // exact division by (q - at)

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(QPoly a);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly exact_quotient(const QPoly& a, const QPoly& b);
// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

// Element of Q(q) in canonical form: coprime numerator and denominator,
// denominator monic, zero stored as 0/1.
class RatFun {
 public:
  RatFun() : den_(Rational(1)) {}
  RatFun(long value) : num_(Rational(value)), den_(Rational(1)) {}  // NOLINT
  RatFun(Rational value);  // NOLINT
  RatFun(QPoly poly);      // NOLINT

  static RatFun q() { return RatFun(QPoly::variable()); }
  // Throws DivisionByZero when den is zero.
  static RatFun fraction(QPoly num, QPoly den);

  const QPoly& numerator() const noexcept { return num_; }
  const QPoly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_constant() const noexcept { return den_.is_one() && num_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  // Requires is_constant().
  Rational constant_value() const;
  // Total degree of numerator and denominator; the pivot heuristic minimizes it.
  int complexity() const noexcept;

  RatFun inverse() const;
  RatFun pow(std::int64_t exponent) const;

  RatFun& operator+=(const RatFun& other);
  RatFun& operator-=(const RatFun& other);
  RatFun& operator*=(const RatFun& other);
  RatFun& operator/=(const RatFun& other);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend RatFun operator-(RatFun a);
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

  std::string to_string() const;

 private:
  RatFun(QPoly num, QPoly den, bool /*canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  QPoly num_;
  QPoly den_;
};

// Grammar (whitespace insignificant, no implicit multiplication):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' signed-int]
//   atom   := integer | 'q' | '(' expr ')' | '-' factor
RatFun parse_scalar(std::string_view text);

// Largest |degree| an exponent may produce while parsing.
inline constexpr std::int64_t kMaxParsedDegree = 1 << 16;

// Value at q = at of a canonical element. Throws Pole when the denominator
// vanishes there.
Rational specialize(const RatFun& x, const Rational& at);
// Raw fraction evaluation without cancellation: Pole when only the
// denominator vanishes, Indeterminate when both do.
Rational specialize(const QPoly& num, const QPoly& den, const Rational& at);

}  // namespace ybx
