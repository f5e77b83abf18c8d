#pragma once

#include <stdexcept>
#include <string>

namespace normsearch {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MixedField : public Error {
 public:
  MixedField(long a, long b)
      : Error("mixed quadratic fields: d=" + std::to_string(a) + " vs d=" + std::to_string(b)) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NotSquarefree : public Error {
 public:
  explicit NotSquarefree(long d) : Error("d=" + std::to_string(d) + " is not a squarefree integer > 1") {}
};

class RepeatedRoot : public Error {
 public:
  RepeatedRoot() : Error("characteristic polynomial has a repeated root") {}
};

class UnsupportedOrder : public Error {
 public:
  explicit UnsupportedOrder(std::size_t order)
      : Error("no exact root data for recurrence of order " + std::to_string(order)) {}
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t want, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(want) + ", got " + std::to_string(got)) {}
};

class TupleTooLarge : public Error {
 public:
  explicit TupleTooLarge(std::size_t t)
      : Error("tuple of size " + std::to_string(t) + " exceeds the subsum limit of 20") {}
};

class TooManyIndices : public Error {
 public:
  explicit TooManyIndices(std::size_t n)
      : Error(std::to_string(n) + " bases exceed the partition limit of 8") {}
};

class UnknownRemark : public Error {
 public:
  explicit UnknownRemark(const std::string& id) : Error("unknown remark id '" + id + "'") {}
};

// Bad user input: maps to exit code 1 in the CLI.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A computed object failed one of its own exactness checks: exit code 2.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace normsearch
