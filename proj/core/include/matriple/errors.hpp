#pragma once

#include <stdexcept>
#include <string>

namespace matriple {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live in incompatible spaces or have inconsistent shapes.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// An operation that requires a Hermitian argument received one whose
/// anti-Hermitian part exceeds the tolerance.
struct NotHermitian : Error {
  using Error::Error;
};

/// A square root (or another positivity-requiring operation) met an
/// eigenvalue below the clipping threshold.
struct NotPositive : Error {
  using Error::Error;
};

/// Inversion of a numerically singular element.
struct Singular : Error {
  using Error::Error;
};

/// The operator does not commute with the right module action.
struct NotALinear : Error {
  using Error::Error;
};

/// Two routes that are provably equivalent disagreed; indicates a bug,
/// never an expected outcome.
struct InternalInconsistency : Error {
  using Error::Error;
};

/// A point violated the (strict) unit-ball membership required of it.
struct OutsideBall : Error {
  using Error::Error;
};

/// The supplied linear map does not preserve the module norm.
struct NotIsometry : Error {
  using Error::Error;
};

/// Malformed fixture or witness file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace matriple
