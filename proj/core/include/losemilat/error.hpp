#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace losemilat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element, point or variable falls outside its semilattice context.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// A term references a variable beyond the arity of a point or context.
class ArityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Exhaustive enumeration would exceed a configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A small-instance guard of an oracle (n, l, |Y| bounds) is violated.
class GuardViolation : public Error {
 public:
  using Error::Error;
};

/// The chain decomposition only covers n <= l.
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

/// An equation does not use exactly the ambient variables x1..xn.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// Irreducibility is not defined for the empty set.
class EmptySetError : public Error {
 public:
  using Error::Error;
};

/// A postcondition that must hold mathematically was violated.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace losemilat
