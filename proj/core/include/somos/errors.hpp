#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace somos {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands were built over different variable tables.
class VarTableMismatch : public Error {
 public:
  using Error::Error;
};

/// Exact division left a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class ZeroAtNegativeExponent : public Error {
 public:
  using Error::Error;
};

class UnassignedVariable : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

class ZeroPivot : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

/// An elimination step that must be exact was not; indicates an arithmetic bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A recurrence left the Laurent ring or produced a zero term.
class SequenceError : public Error {
 public:
  enum class Kind { NotDivisible, ZeroTerm };

  SequenceError(Kind kind, std::size_t index, const std::string& what)
      : Error(what), kind_(kind), index_(index) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t index() const noexcept { return index_; }

 private:
  Kind kind_;
  std::size_t index_;
};

}  // namespace somos
