#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ulcf {

enum class ErrorCode {
  kParse = 1,
  kInvalidArgument = 2,
  kPrecondition = 3,
  kLimitExceeded = 4,
};

/// Base class for every error raised by the library. The C API maps `code()`
/// onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed textual input. `offset()` is the byte position of the first
/// offending character.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::kParse,
              what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

/// A mathematical hypothesis of the requested computation does not hold
/// (e.g. a permutation that is not an automorphism).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorCode::kPrecondition, what) {}
};

/// The instance is outside the feasible enumeration window. Never silently
/// approximated; callers either refuse or record a skip.
class LimitExceeded : public Error {
 public:
  explicit LimitExceeded(const std::string& what)
      : Error(ErrorCode::kLimitExceeded, what) {}
};

}  // namespace ulcf
