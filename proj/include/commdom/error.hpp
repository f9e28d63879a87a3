#pragma once

#include <stdexcept>
#include <string>

namespace commdom {

/// Base of every error this library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A group or graph would exceed the configured size cap.
class SizeLimitError : public Error {
public:
  using Error::Error;
};

/// An argument violates an operation's precondition (bad index, non-abelian
/// input where abelian is required, non-prime parameter, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Malformed input file, descriptor, or manifest.
class FormatError : public Error {
public:
  using Error::Error;
};

/// A closed-form evaluation produced a value that violates its own integrality
/// contract. Should never fire.
class FormulaIntegrityError : public Error {
public:
  using Error::Error;
};

}  // namespace commdom
