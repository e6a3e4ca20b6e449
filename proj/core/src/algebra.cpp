#include "matriple/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace matriple {

void ToleranceConfig::validate() const {
  if (!(abs_tol > 0.0) || !(composed_tol > 0.0) || !(eig_clip > 0.0)) {
    throw std::invalid_argument("tolerances must be strictly positive");
  }
  if (!(eig_clip <= abs_tol && abs_tol <= composed_tol)) {
    throw std::invalid_argument(
        "tolerance ladder violated: need eig_clip <= abs_tol <= composed_tol");
  }
  if (sample_count < 1) {
    throw std::invalid_argument("sample_count must be at least 1");
  }
}

ToleranceConfig ToleranceConfig::scaled(double abs_tol) {
  ToleranceConfig t;
  t.abs_tol = abs_tol;
  t.composed_tol = abs_tol * 100.0;
  t.eig_clip = abs_tol / 100.0;
  t.validate();
  return t;
}

Matrix adjoint(const Matrix& a) { return a.adjoint(); }

double op_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
}

bool is_hermitian(const Matrix& a, const ToleranceConfig& tol) {
  if (a.rows() != a.cols()) return false;
  return op_norm(a - a.adjoint()) <= tol.abs_tol * (1.0 + op_norm(a));
}

void require_hermitian(const Matrix& a, const ToleranceConfig& tol,
                       const char* who) {
  if (!is_hermitian(a, tol)) {
    throw NotHermitian(std::string(who) + ": argument is not Hermitian");
  }
}

namespace {

Eigen::SelfAdjointEigenSolver<Matrix> hermitian_eigen(const Matrix& a,
                                                      const ToleranceConfig& tol,
                                                      const char* who) {
  require_hermitian(a, tol, who);
  // Symmetrise so rounding in the caller's arithmetic cannot leak into
  // the spectrum.
  Matrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    throw Error(std::string(who) + ": eigendecomposition failed");
  }
  return es;
}

}  // namespace

Eigen::VectorXd spectrum_hermitian(const Matrix& a, const ToleranceConfig& tol) {
  return hermitian_eigen(a, tol, "spectrum_hermitian").eigenvalues();
}

double min_eigenvalue_hermitian(const Matrix& a, const ToleranceConfig& tol) {
  return hermitian_eigen(a, tol, "min_eigenvalue_hermitian").eigenvalues()(0);
}

Matrix sqrt_psd(const Matrix& a, const ToleranceConfig& tol) {
  auto es = hermitian_eigen(a, tol, "sqrt_psd");
  Eigen::VectorXd ev = es.eigenvalues();
  if (ev(0) < -tol.eig_clip) {
    throw NotPositive("sqrt_psd: eigenvalue " + std::to_string(ev(0)) +
                      " below -eig_clip");
  }
  Eigen::VectorXd roots(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    roots(i) = ev(i) > 0.0 ? std::sqrt(ev(i)) : 0.0;
  }
  return es.eigenvectors() * roots.asDiagonal() *
         es.eigenvectors().adjoint();
}

Inversion invert(const Matrix& a, const ToleranceConfig& tol) {
  require_square(a, "invert");
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (smin <= tol.eig_clip * smax || smax == 0.0) {
    throw Singular("invert: smallest singular value " + std::to_string(smin) +
                   " within eig_clip of zero");
  }
  Eigen::VectorXcd inv_sv = sv.cwiseInverse().cast<Complex>();
  return Inversion{svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint(),
                   smax / smin};
}

Matrix unitary_exp(const Matrix& a, double t, const ToleranceConfig& tol) {
  auto es = hermitian_eigen(a, tol, "unitary_exp");
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, t * es.eigenvalues()(i)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

bool loewner_geq(const Matrix& a, const Matrix& b, const ToleranceConfig& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("loewner_geq: shape mismatch");
  }
  Matrix d = a - b;
  require_hermitian(d, tol, "loewner_geq");
  const double slack = tol.abs_tol * (1.0 + op_norm(a) + op_norm(b));
  return min_eigenvalue_hermitian(d, tol) >= -slack;
}

bool all_finite(const Matrix& a) { return a.allFinite(); }

void require_finite(const Matrix& a, const char* who) {
  if (!a.allFinite()) {
    throw Error(std::string(who) + ": non-finite entry");
  }
}

void require_square(const Matrix& a, const char* who) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch(std::string(who) + ": square matrix required");
  }
}

}  // namespace matriple
