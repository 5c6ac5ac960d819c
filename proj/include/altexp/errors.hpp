#pragma once

#include <stdexcept>
#include <string>

namespace altexp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds a combinatorial size guard (factorial or 2^n growth).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Operands of mismatched dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the set an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent serialized data.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace altexp
