#pragma once

#include <stdexcept>
#include <string>

namespace gassoc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (type, rank) pair that is not a Dynkin diagram, or a shape mismatch.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Vertex is neither a source nor a sink where one is required.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

class UnsupportedGraphError : public Error {
 public:
  using Error::Error;
};

/// Requested computation exceeds the configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; indicates a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gassoc
