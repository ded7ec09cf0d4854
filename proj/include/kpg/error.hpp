#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kpg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary series operation on operands with different truncation orders.
class OrderMismatchError : public Error {
 public:
  using Error::Error;
};

/// Binary series operation mixing q- and p-variables.
class VariableMismatchError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation
/// (exp of a series with a constant term, is_connected on the empty graph, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class RescaleError : public Error {
 public:
  using Error::Error;
};

/// A monomial of weight above the truncation order was requested.
class OutOfTruncationError : public Error {
 public:
  using Error::Error;
};

/// A size cap (vertex count, edge count, truncation order) was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

class MissingEdgeError : public Error {
 public:
  using Error::Error;
};

class IncompleteCoefficientsError : public Error {
 public:
  using Error::Error;
};

class DegeneratePlanError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input; `offset` is the byte position of the first bad byte.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace kpg
