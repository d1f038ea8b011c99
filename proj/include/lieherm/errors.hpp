#ifndef LIEHERM_ERRORS_HPP
#define LIEHERM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lieherm {

/// Input data is malformed: bad file contents, index out of range, broken
/// structural invariant of a value being constructed. Maps to exit code 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input is well formed but outside an operation's mathematical domain.
/// Maps to exit code 2.
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

class IndexOutOfRange : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class DuplicateEntry : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class DiagonalBracket : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class JacobiViolation : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class OddDimension : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NotUnitary : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class DimensionMismatch : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class UnknownName : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// A candidate alpha is not of type (1,1); carries the first violating triple.
class NotType11 : public ValidationError {
public:
  NotType11(const std::string& msg, int a, int b, int c)
      : ValidationError(msg), a(a), b(b), c(c) {}
  int a, b, c;
};

class NijenhuisNotSkew : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class NotProductForm : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class NotBiinvariantFrame : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// A torsion tensor fails total skewness; carries a witness triple.
class NotTotallySkew : public PreconditionError {
public:
  NotTotallySkew(const std::string& msg, int a, int b, int c)
      : PreconditionError(msg), a(a), b(b), c(c) {}
  int a, b, c;
};

} // namespace lieherm

#endif
