#pragma once

#include <stdexcept>
#include <string>

namespace ifss {

/// Base of every error raised by the library. Messages name the offending
/// input (a value, a parameter, or a document path) so callers can report
/// them verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A degree outside the unit interval.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// mu + nu exceeds 1, a relation value escapes its cartesian product, or a
/// norm pairing is not one of the dual combinations.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// Parameter sets that must coincide do not (composition middle sets,
/// square-relation predicates).
class ParamMismatch : public Error {
 public:
  using Error::Error;
};

/// A lookup or construction outside the valid domain: foreign elements or
/// parameters, pairs outside A x B, non-positive powers.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Unknown norm-pair or law name.
class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace ifss
