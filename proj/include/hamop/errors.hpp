#ifndef HAMOP_ERRORS_HPP
#define HAMOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hamop {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two expressions built over structurally different spaces were combined.
struct SpaceMismatch : Error {
  explicit SpaceMismatch(const std::string& msg) : Error(msg) {}
};

// A coordinate was requested that the space does not declare.
struct UnknownAtom : Error {
  explicit UnknownAtom(const std::string& msg) : Error(msg) {}
};

// An operation would mix parities in a forbidden way, e.g. binding an even
// coordinate to an expression with odd factors.
struct ParityViolation : Error {
  explicit ParityViolation(const std::string& msg) : Error(msg) {}
};

// A derivative coordinate beyond the declared truncation order was needed.
// The computation cannot proceed at the current truncation; callers may
// rebuild the space with total_order >= required_order and retry.
struct OrderExceeded : Error {
  std::string variable;     // base variable whose jet ran out of range
  unsigned required_order;  // smallest truncation order that would suffice
  OrderExceeded(std::string var, unsigned required)
      : Error("truncation order exceeded: derivative of '" + var +
              "' of order " + std::to_string(required) +
              " is outside the declared jet space"),
        variable(std::move(var)),
        required_order(required) {}
};

// A superfunction had the wrong homogeneous degree for the operation.
struct DegreeViolation : Error {
  explicit DegreeViolation(const std::string& msg) : Error(msg) {}
};

// Matrix or operator dimensions do not line up.
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

// A matrix that must be invertible has zero determinant.
struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

// The Jacobian of a coordinate change is degenerate.
struct SingularJacobian : Error {
  explicit SingularJacobian(const std::string& msg) : Error(msg) {}
};

// Division by an expression that is identically zero.
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// An expression was not polynomial in the requested coordinates.
struct NotPolynomial : Error {
  explicit NotPolynomial(const std::string& msg) : Error(msg) {}
};

// A metric or candidate operator failed a required symmetry property.
struct AntisymmetryViolation : Error {
  explicit AntisymmetryViolation(const std::string& msg) : Error(msg) {}
};

// Parse error in the expression or script grammar; pos is a byte offset.
// raw keeps the message without the position suffix so callers can
// re-anchor the error inside a larger input.
struct SyntaxError : Error {
  std::size_t pos;
  std::string raw;
  SyntaxError(const std::string& msg, std::size_t at)
      : Error(msg + " (at offset " + std::to_string(at) + ")"),
        pos(at),
        raw(msg) {}
};

// A name used in a script or expression is not bound.
struct UnknownName : Error {
  explicit UnknownName(const std::string& msg) : Error(msg) {}
};

}  // namespace hamop

#endif  // HAMOP_ERRORS_HPP
