#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "ybx/scalars.hpp"

namespace ybx {

namespace {

// Recursive-descent parser for the scalar grammar.
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  RatFun parse() {
    RatFun value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ErrorCode::Syntax, pos_, message);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFun expr() {
    RatFun acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFun term() {
    RatFun acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RatFun divisor = factor();
        if (divisor.is_zero()) {
          throw ParseError(ErrorCode::DivisionByZero, at, "division by zero");
        }
        acc /= divisor;
      } else {
        return acc;
      }
    }
  }

  RatFun factor() {
    RatFun base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (digits == pos_) fail("expected integer exponent");
    std::int64_t magnitude = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, magnitude);
    (void)ptr;
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(ErrorCode::ExponentOverflow, start, "exponent out of range");
    }
    const int degree = std::max({base.numerator().degree(), base.denominator().degree(), 1});
    const bool trivial_base = base.is_constant() && abs(base.constant_value()) <= 1;
    if (!trivial_base && magnitude > kMaxParsedDegree / degree) {
      throw ParseError(ErrorCode::ExponentOverflow, start, "exponent too large");
    }
    if (negative && base.is_zero()) {
      throw ParseError(ErrorCode::DivisionByZero, start, "zero to a negative power");
    }
    return base.pow(negative ? -magnitude : magnitude);
  }

  RatFun atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'q') {
      ++pos_;
      return RatFun::q();
    }
    if (c == '(') {
      ++pos_;
      RatFun inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      mpz_class value(std::string(text_.substr(start, pos_ - start)), 10);
      return RatFun(Rational(value));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace ybx
