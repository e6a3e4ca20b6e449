#pragma once

#include <complex>

#include <Eigen/Dense>

#include "matriple/errors.hpp"
#include "matriple/tolerance.hpp"

namespace matriple {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Conjugate transpose.
Matrix adjoint(const Matrix& a);

/// Largest singular value; the C*-norm of a matrix algebra.
double op_norm(const Matrix& a);

/// Relative Hermitian test: ||a - a*|| <= abs_tol * (1 + ||a||).
bool is_hermitian(const Matrix& a, const ToleranceConfig& tol);

/// Throws NotHermitian (mentioning `who`) if the test above fails.
void require_hermitian(const Matrix& a, const ToleranceConfig& tol,
                       const char* who);

/// All eigenvalues of a Hermitian element, ascending.
Eigen::VectorXd spectrum_hermitian(const Matrix& a, const ToleranceConfig& tol);

/// Smallest eigenvalue of a Hermitian element.
double min_eigenvalue_hermitian(const Matrix& a, const ToleranceConfig& tol);

/// The unique PSD square root, via eigendecomposition.  Eigenvalues in
/// [-eig_clip, 0) are clipped to zero; anything below throws NotPositive.
Matrix sqrt_psd(const Matrix& a, const ToleranceConfig& tol);

struct Inversion {
  Matrix inverse;
  double condition;  // sigma_max / sigma_min
};

/// Inverse with its condition number.  Throws Singular when the smallest
/// singular value is at most eig_clip times the largest.
Inversion invert(const Matrix& a, const ToleranceConfig& tol);

/// exp(i*t*a) for Hermitian a; unitary up to composed_tol.
Matrix unitary_exp(const Matrix& a, double t, const ToleranceConfig& tol);

/// a >= b in the Loewner order: min eigenvalue of (a - b) is at least
/// -abs_tol * (1 + ||a|| + ||b||).  Throws NotHermitian when a - b is not.
bool loewner_geq(const Matrix& a, const Matrix& b, const ToleranceConfig& tol);

bool all_finite(const Matrix& a);
void require_finite(const Matrix& a, const char* who);
void require_square(const Matrix& a, const char* who);

}  // namespace matriple
