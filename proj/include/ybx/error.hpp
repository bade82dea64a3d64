#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ybx {

enum class ErrorCode {
  DivisionByZero,
  Syntax,
  ExponentOverflow,
  Pole,
  Indeterminate,
  DimensionMismatch,
  Bounds,
  Precondition,
  Spectrum,
  NotComplementary,
  SaturationFailed,
  ResourceGuard,
  UnknownName,
  Input,
};

const char* to_string(ErrorCode code);

// Every failure the library reports is an Error carrying a code; callers
// that need the details catch the derived types.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t offset, const std::string& message)
      : Error(code, message + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ResourceGuardError : public Error {
 public:
  ResourceGuardError(std::string bound, std::size_t requested,
                     std::size_t limit)
      : Error(ErrorCode::ResourceGuard,
              bound + " = " + std::to_string(requested) + " exceeds limit " +
                  std::to_string(limit)),
        bound_(std::move(bound)),
        requested_(requested),
        limit_(limit) {}

  const std::string& bound() const noexcept { return bound_; }
  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string bound_;
  std::size_t requested_;
  std::size_t limit_;
};

}  // namespace ybx
