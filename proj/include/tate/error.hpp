#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tate {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A desk-scale size bound (conductor, matrix dimension, group order, ...) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NegativeHighestWeight : public Error {
 public:
  using Error::Error;
};

class FactorMismatch : public Error {
 public:
  using Error::Error;
};

class NotACharacter : public Error {
 public:
  using Error::Error;
};

class NotADivisor : public Error {
 public:
  using Error::Error;
};

class OrderBound : public BoundExceeded {
 public:
  using BoundExceeded::BoundExceeded;
};

class AbelianizationBound : public BoundExceeded {
 public:
  using BoundExceeded::BoundExceeded;
};

class DegreeBound : public BoundExceeded {
 public:
  using BoundExceeded::BoundExceeded;
};

class PrimeBound : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  GroupMismatch() : Error("objects belong to different groups") {}
};

class NotNormal : public Error {
 public:
  NotNormal() : Error("subgroup is not normal") {}
};

class SingularImage : public Error {
 public:
  using Error::Error;
};

class NoWitness : public Error {
 public:
  using Error::Error;
};

/// Raised when a representation fails rho(g)rho(h) = rho(gh); carries the offending pair.
class NotAHomomorphism : public Error {
 public:
  NotAHomomorphism(std::size_t g, std::size_t h)
      : Error("not a homomorphism at pair (" + std::to_string(g) + "," + std::to_string(h) + ")"),
        first_(g),
        second_(h) {}

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// Fixture syntax error; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tate
