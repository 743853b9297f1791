#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace galileo {

/// Base of every exception the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression source. `position()` is a byte offset into the source.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at byte " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Evaluation left the domain of an elementary function, divided by zero, or
/// produced a non-finite value or derivative.
class EvalError : public Error {
 public:
  EvalError(const std::string& what, std::string subexpression, std::vector<double> point)
      : Error(what), subexpression_(std::move(subexpression)), point_(std::move(point)) {}

  const std::string& subexpression() const noexcept { return subexpression_; }
  const std::vector<double>& point() const noexcept { return point_; }

 private:
  std::string subexpression_;
  std::vector<double> point_;
};

/// A geometric quantity is undefined at the requested point (W ~ 0, Euclidean
/// tangent plane, vanishing curvature where torsion is requested).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Arguments violate a documented precondition (singular matrix, non-unit-speed
/// curve, torsion check failed, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace galileo
