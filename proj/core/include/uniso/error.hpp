#pragma once

#include <stdexcept>
#include <string>

namespace uniso {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic or linear algebra mixed values from two different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Shapes, ambient dimensions or vertex counts do not line up.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Two path words (or two morphisms) cannot be concatenated.
class NotComposable : public Error {
 public:
  using Error::Error;
};

/// Path basis enumeration exceeded its cap.
class InfiniteDimensional : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration would exceed a hard size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A representation violates one of its monomial relations.
class RelationViolated : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different quiver algebras.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/// Requested operation is outside what the model supports.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace uniso
