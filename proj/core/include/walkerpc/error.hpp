#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "walkerpc/point.hpp"

namespace walkerpc {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression or manifest text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An identifier that is neither a coordinate nor a bound constant.
class UnboundIdentifierError : public ParseError {
 public:
  UnboundIdentifierError(const std::string& name, std::size_t line, std::size_t column)
      : ParseError("unbound identifier '" + name + "'", line, column), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Unreadable input file, unknown fixture name or invalid option value.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Evaluation left the domain of a partial operation (sqrt of a non-positive
/// number, division by zero, non-finite result).
class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::string subexpression, const Point3& point)
      : Error(what + " in '" + subexpression + "' at " + to_string(point)),
        subexpression_(std::move(subexpression)),
        point_(point) {}

  const std::string& subexpression() const noexcept { return subexpression_; }
  const Point3& point() const noexcept { return point_; }

 private:
  std::string subexpression_;
  Point3 point_;
};

/// The sampler could not find admissible points in the declared domain.
class NoValidSampleError : public Error {
 public:
  using Error::Error;
};

/// A caller asked for something whose precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Epsilon = -1 Walker metrics carry no almost paracontact metric structure.
class NonExistenceError : public Error {
 public:
  using Error::Error;
};

/// The Reeb field is not g-unit: xi2^2 + f xi3^2 + 2 xi1 xi3 != 1.
class UnitConstraintError : public Error {
 public:
  UnitConstraintError(const std::string& what, const Point3& witness, double magnitude)
      : Error(what + " at " + to_string(witness)), witness_(witness), magnitude_(magnitude) {}

  const Point3& witness() const noexcept { return witness_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  Point3 witness_;
  double magnitude_;
};

/// A tangent plane on which the induced metric is (numerically) degenerate.
class DegenerateSectionError : public Error {
 public:
  using Error::Error;
};

/// Input that makes a closed-form route ill-defined (e.g. f_xx vanishing
/// where the eigenvector formula divides by it).
class DegenerateInputError : public Error {
 public:
  DegenerateInputError(const std::string& what, const Point3& witness)
      : Error(what + " at " + to_string(witness)), witness_(witness) {}
  const Point3& witness() const noexcept { return witness_; }

 private:
  Point3 witness_;
};

}  // namespace walkerpc
