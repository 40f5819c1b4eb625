#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charnum {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonSquare : public Error {
 public:
  using Error::Error;
};

/// A power series without a multiplicative inverse (zero constant term).
class NonUnit : public Error {
 public:
  using Error::Error;
};

class TruncationTooShort : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// A weight or generator index outside [1, cap].
class OutOfRange : public Error {
 public:
  using Error::Error;
};

class UnknownSeries : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a manifold expression. `column` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& message)
      : Error("column " + std::to_string(column) + ": " + message),
        column_(column),
        detail_(message) {}

  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t column_;
  std::string detail_;
};

}  // namespace charnum
