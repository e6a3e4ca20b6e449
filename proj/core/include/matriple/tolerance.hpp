#pragma once

namespace matriple {

/// Tolerances shared by every approximate assertion in the library.
///
/// abs_tol guards identities evaluated in one or two products;
/// composed_tol guards results routed through eigendecompositions,
/// square roots or inverses; eigenvalues in [-eig_clip, 0) are treated
/// as floating-point noise and clipped to zero, anything more negative
/// is an error.
struct ToleranceConfig {
  double abs_tol = 1e-10;
  double composed_tol = 1e-8;
  double eig_clip = 1e-12;
  int sample_count = 64;  // draws used by sampled universal quantifiers

  /// Throws std::invalid_argument unless all fields are strictly positive
  /// and eig_clip <= abs_tol <= composed_tol.
  void validate() const;

  /// Rescales the default ladder around a new absolute tolerance, keeping
  /// the default ratios (composed = 100*abs, clip = abs/100).
  static ToleranceConfig scaled(double abs_tol);
};

}  // namespace matriple
