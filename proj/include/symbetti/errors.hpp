#pragma once

#include <stdexcept>
#include <string>

namespace symbetti {

enum class ErrorCode {
  ParseError = 1,
  NotWeaklyDecreasing,
  NotPrime,
  InvalidArgument,
  SizeCapExceeded,
  Undefined,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a computation would exceed a configured size cap
/// (homology vertex count, Taylor generator count).
class SizeCapError : public Error {
 public:
  explicit SizeCapError(const std::string& what)
      : Error(ErrorCode::SizeCapExceeded, what) {}
};

/// Raised when a quantity (pd, reg, asymptotic profile) is undefined, e.g.
/// for the zero ideal.
class UndefinedError : public Error {
 public:
  explicit UndefinedError(const std::string& what)
      : Error(ErrorCode::Undefined, what) {}
};

}  // namespace symbetti
