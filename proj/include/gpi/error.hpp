#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpi {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Characteristic 2 (or p = 2) requested; the whole library assumes p != 2.
class OutOfScope : public Error {
 public:
  using Error::Error;
};

/// Operands live over different fields, algebras or unital contexts.
class Mismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at position " + std::to_string(position) + ": " +
              what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gpi
