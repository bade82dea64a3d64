#include "ybx/scalars.hpp"

#include <algorithm>
#include <cassert>

namespace ybx {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::ExponentOverflow: return "exponent-overflow";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::Indeterminate: return "indeterminate";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::Bounds: return "bounds";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Spectrum: return "spectrum";
    case ErrorCode::NotComplementary: return "not-complementary";
    case ErrorCode::SaturationFailed: return "saturation-failed";
    case ErrorCode::ResourceGuard: return "resource-guard";
    case ErrorCode::UnknownName: return "unknown-name";
    case ErrorCode::Input: return "input";
  }
  return "unknown";
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0 ||
      r.get_den() == 0) {
    throw Error(ErrorCode::Input,
                "not a rational number: '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- QPoly

namespace {
const Rational& zero_rational() {
  static const Rational zero(0);
  return zero;
}
}  // namespace

QPoly::QPoly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

QPoly QPoly::monomial(Rational coefficient, std::size_t degree) {
  QPoly p;
  if (coefficient == 0) return p;
  p.coeffs_.assign(degree + 1, Rational(0));
  p.coeffs_[degree] = std::move(coefficient);
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool QPoly::is_monomial() const noexcept {
  if (coeffs_.empty()) return false;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

const Rational& QPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_rational();
}

std::size_t QPoly::low_degree() const noexcept {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return coeffs_.empty() ? 0 : k;
}

std::size_t QPoly::multiplicity_at(const Rational& at) const {
  if (is_zero()) return 0;
  if (at == 0) return low_degree();
  std::size_t m = 0;
  QPoly p = *this;
  while (!p.is_zero() && p(at) == 0) {
    p = p.divided_by_root(at);
    ++m;
  }
  return m;
}

Rational QPoly::operator()(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

QPoly QPoly::scaled(const Rational& factor) const {
  if (factor == 0) return QPoly();
  QPoly p = *this;
  for (auto& c : p.coeffs_) c *= factor;
  return p;
}

QPoly QPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  Rational inv = 1 / leading();
  return scaled(inv);
}

Rational QPoly::content() const {
  if (is_zero()) return Rational(0);
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

QPoly QPoly::shifted_down(std::size_t k) const {
  assert(k <= low_degree() || is_zero());
  if (k == 0 || is_zero()) return *this;
  return QPoly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k),
                                     coeffs_.end()));
}

QPoly QPoly::divided_by_root(const Rational& at) const {
  // Synthetic division; the remainder must vanish.
  if (coeffs_.size() <= 1) {
    assert(is_zero());
    return QPoly();
  }
  std::vector<Rational> out(coeffs_.size() - 1);
  Rational carry(0);
  for (std::size_t i = coeffs_.size(); i-- > 1;) {
    carry = coeffs_[i] + carry * at;
    out[i - 1] = carry;
  }
  assert(coeffs_[0] + carry * at == 0);
  return QPoly(std::move(out));
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  if (b.coeffs_.size() == 1) return a.scaled(b.coeffs_[0]);
  if (a.coeffs_.size() == 1) return b.scaled(a.coeffs_[0]);
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                            Rational(0));
  Rational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      t = a.coeffs_[i] * b.coeffs_[j];
      out[i + j] += t;
    }
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly operator-(QPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(c);
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "q";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                             Rational(0));
  const auto bc = b.coefficients();
  const Rational inv_lead = 1 / b.leading();
  Rational t;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::size_t top = k + bc.size() - 1;
    if (rem[top] == 0) continue;
    Rational factor = rem[top] * inv_lead;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      if (bc[j] == 0) continue;
      t = factor * bc[j];
      rem[k + j] -= t;
    }
    quot[k] = std::move(factor);
  }
  rem.resize(bc.size() - 1);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
  if (b.is_monomial()) {
    QPoly shifted = a.shifted_down(b.low_degree());
    return b.leading() == 1 ? shifted : shifted.scaled(1 / b.leading());
  }
  auto [quot, rem] = divmod(a, b);
  assert(rem.is_zero());
  return quot;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return QPoly(Rational(1));
  if (a.is_monomial() || b.is_monomial()) {
    return QPoly::monomial(Rational(1), std::min(a.low_degree(), b.low_degree()));
  }
  QPoly x = a.monic();
  QPoly y = b.monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(Rational value) : num_(std::move(value)), den_(Rational(1)) {}

RatFun::RatFun(QPoly poly) : num_(std::move(poly)), den_(Rational(1)) {}

RatFun RatFun::fraction(QPoly num, QPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  RatFun r(std::move(num), std::move(den), true);
  r.normalize();
  return r;
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    QPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  if (den_.leading() != 1) {
    Rational inv = 1 / den_.leading();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rational RatFun::constant_value() const {
  assert(is_constant());
  return num_.is_zero() ? Rational(0) : num_.coeff(0);
}

int RatFun::complexity() const noexcept {
  return std::max(num_.degree(), 0) + den_.degree();
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  RatFun r(den_, num_, true);
  if (r.den_.leading() != 1) {
    Rational inv = 1 / r.den_.leading();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RatFun RatFun::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RatFun result(1L);
  RatFun base = *this;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

RatFun& RatFun::operator+=(const RatFun& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = QPoly(Rational(1));
    return *this;
  }
  QPoly g = gcd(den_, other.den_);
  if (g.is_one()) {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
    if (num_.is_zero()) den_ = QPoly(Rational(1));
    return *this;
  }
  QPoly mine = exact_quotient(den_, g);
  QPoly theirs = exact_quotient(other.den_, g);
  num_ = num_ * theirs + other.num_ * mine;
  den_ = mine * other.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& other) { return *this += -other; }

RatFun& RatFun::operator*=(const RatFun& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = RatFun();
  if (den_.is_one() && other.den_.is_one()) {
    num_ = num_ * other.num_;
    return *this;
  }
  QPoly g1 = gcd(num_, other.den_);
  QPoly g2 = gcd(other.num_, den_);
  QPoly n1 = g1.is_one() ? num_ : exact_quotient(num_, g1);
  QPoly d2 = g1.is_one() ? other.den_ : exact_quotient(other.den_, g1);
  QPoly n2 = g2.is_one() ? other.num_ : exact_quotient(other.num_, g2);
  QPoly d1 = g2.is_one() ? den_ : exact_quotient(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& other) { return *this *= other.inverse(); }

RatFun operator-(RatFun a) {
  a.num_ = -std::move(a.num_);
  return a;
}

std::string RatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto single_term = [](const QPoly& p) {
    return p.is_monomial();
  };
  std::string num = num_.to_string();
  std::string den = den_.to_string();
  if (!single_term(num_)) num = "(" + num + ")";
  // A monic single-term denominator is a bare power of q.
  if (!single_term(den_)) den = "(" + den + ")";
  return num + "/" + den;
}

Rational specialize(const QPoly& num, const QPoly& den, const Rational& at) {
  Rational d = den(at);
  Rational n = num(at);
  if (d == 0) {
    if (n == 0) {
      throw Error(ErrorCode::Indeterminate,
                  "0/0 at q = " + at.get_str() + " before cancellation");
    }
    throw Error(ErrorCode::Pole, "pole at q = " + at.get_str());
  }
  return n / d;
}

Rational specialize(const RatFun& x, const Rational& at) {
  if (x.is_polynomial()) return x.numerator()(at);
  Rational d = x.denominator()(at);
  if (d == 0) {
    throw Error(ErrorCode::Pole,
                "pole of " + x.to_string() + " at q = " + at.get_str());
  }
  return x.numerator()(at) / d;
}

}  // namespace ybx
