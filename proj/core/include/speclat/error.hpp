#ifndef SPECLAT_ERROR_HPP
#define SPECLAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace speclat {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An axiom or invariant of a structure fails. The message names a
/// concrete witness (element, pair or triple) so callers can report it.
class InvalidStructureError : public Error {
 public:
  using Error::Error;
};

/// A caller violated an operation's precondition (carrier mismatch,
/// relation not compatible, map not a homomorphism, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its search-space guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Two enumeration strategies that must agree produced different results.
class CrossCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace speclat

#endif  // SPECLAT_ERROR_HPP
