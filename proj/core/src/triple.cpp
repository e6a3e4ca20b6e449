#include "matriple/triple.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace matriple {

Matrix triple_product(const Matrix& x, const Matrix& y, const Matrix& z) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != z.rows() ||
      x.cols() != z.cols()) {
    throw DimensionMismatch("triple_product: operands live in different spaces");
  }
  return 0.5 * (module_action(x, inner(y, z)) + module_action(z, inner(y, x)));
}

ModuleOperator box(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionMismatch("box: operands live in different spaces");
  }
  ModuleSpace space{x.rows(), x.cols()};
  return operator_from_action(
      space, [&](const Matrix& z) { return triple_product(x, y, z); });
}

Matrix box_rep_closed_form(const Matrix& x, const Matrix& y) {
  const Eigen::Index m = x.rows();
  const Eigen::Index n = x.cols();
  Matrix left = Eigen::kroneckerProduct(Matrix::Identity(n, n),
                                        (x * y.adjoint()).eval());
  Matrix right = Eigen::kroneckerProduct(
      (y.adjoint() * x).transpose().eval(), Matrix::Identity(m, m));
  return 0.5 * (left + right);
}

double jordan_residual(const Matrix& a, const Matrix& b, const Matrix& c,
                       const Matrix& d) {
  ModuleOperator ab = box(a, b);
  ModuleOperator cd = box(c, d);
  Matrix commutator = ab.rep() * cd.rep() - cd.rep() * ab.rep();
  Matrix rhs = box(triple_product(a, b, c), d).rep() -
               box(c, triple_product(d, a, b)).rep();
  return op_norm(commutator - rhs);
}

bool BoxStructureReport::passes(const ToleranceConfig& tol) const {
  const double floor = -tol.abs_tol;
  return decomp_residual <= tol.abs_tol && theta_min_eig >= floor &&
         rmult_min_eig >= floor && box_min_eig >= floor &&
         isometry_defect <= tol.composed_tol;
}

BoxStructureReport box_structure_report(const Matrix& x,
                                        const ToleranceConfig& tol, Rng& rng) {
  ModuleSpace space{x.rows(), x.cols()};
  BoxStructureReport report;

  ModuleOperator bx = box(x, x);
  ModuleOperator th = theta(x, x);
  ModuleOperator rm = right_mult(inner(x, x), space);

  report.decomp_residual = op_norm(bx.rep() - 0.5 * (th.rep() + rm.rep()));

  auto min_eig = [&](const Matrix& rep) {
    Matrix h = 0.5 * (rep + rep.adjoint());
    return Eigen::SelfAdjointEigenSolver<Matrix>(h).eigenvalues()(0);
  };
  report.theta_min_eig = min_eig(th.rep());
  report.rmult_min_eig = min_eig(rm.rep());
  report.box_min_eig = min_eig(bx.rep());

  // exp(i t box(x,x)) must preserve the module norm; sample the standard
  // basis plus random draws, since the claim is about the true norm on E,
  // not the Frobenius norm of the representation.
  std::vector<Matrix> probes;
  probes.reserve(static_cast<std::size_t>(space.dim()) + tol.sample_count);
  for (Eigen::Index k = 0; k < space.dim(); ++k) {
    probes.push_back(unvectorize(Eigen::VectorXcd::Unit(space.dim(), k), space));
  }
  for (int s = 0; s < tol.sample_count; ++s) {
    probes.push_back(rng.gaussian_matrix(space.rows, space.cols));
  }

  double defect = 0.0;
  for (double t : {0.5, -0.5, 1.0, -1.0, 2.0, -2.0}) {
    Matrix u = unitary_exp(0.5 * (bx.rep() + bx.rep().adjoint()), t, tol);
    for (const Matrix& z : probes) {
      const double nz = module_norm(z);
      if (nz == 0.0) continue;
      const double nu = module_norm(unvectorize(u * vectorize(z), space));
      defect = std::max(defect, std::abs(nu / nz - 1.0));
    }
  }
  report.isometry_defect = defect;
  return report;
}

double cube_identity_residual(const Matrix& x) {
  const double cube = std::pow(module_norm(x), 3);
  return std::abs(module_norm(triple_product(x, x, x)) - cube) / (1.0 + cube);
}

Matrix quadratic(const Matrix& c, const Matrix& x) {
  if (c.rows() != x.rows() || c.cols() != x.cols()) {
    throw DimensionMismatch("quadratic: operands live in different spaces");
  }
  return module_action(c, inner(x, c));
}

}  // namespace matriple
