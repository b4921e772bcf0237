#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fusioninv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring, solution, zero-set or basis input. `line`/`column` are
/// 1-based and zero when unknown; `field` names the offending JSON member.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string field = {}, std::size_t line = 0,
             std::size_t column = 0);

  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string field_;
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotMultiplicityFree : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A solution, basis or automorphism does not belong to the ring it is used with.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// The solution's zero set differs from the one an invariant basis was built for.
class ZeroSetMismatch : public Error {
 public:
  using Error::Error;
};

class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace fusioninv
