#include "matriple/extremal.hpp"

#include <cmath>
#include <string>

namespace matriple {

bool is_tripotent(const Matrix& c, const ToleranceConfig& tol) {
  const double cube = std::pow(module_norm(c), 3);
  Matrix residue = c - module_action(c, inner(c, c));
  return op_norm(residue) <= tol.abs_tol * (1.0 + cube);
}

ExtremeClassification classify(const Matrix& c, const ToleranceConfig& tol) {
  const double norm = module_norm(c);
  if (norm > 1.0 + tol.abs_tol) {
    throw OutsideBall("classify: norm " + std::to_string(norm) +
                      " outside the closed unit ball");
  }
  const Eigen::Index m = c.rows();
  const Eigen::Index n = c.cols();

  ExtremeClassification result;
  result.bergmann_norm = bergmann(c).norm();
  result.is_extreme = result.bergmann_norm <= tol.abs_tol;
  result.is_tripotent = matriple::is_tripotent(c, tol);
  result.family_full_norm =
      op_norm(c.adjoint() * c - Matrix::Identity(n, n)) <= tol.abs_tol;
  result.family_full_range =
      op_norm(c * c.adjoint() - Matrix::Identity(m, m)) <= tol.abs_tol;
  return result;
}

Matrix random_tripotent(ModuleSpace space, Rng& rng) {
  Matrix g = rng.gaussian_matrix(space.rows, space.cols);
  Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd sv = svd.singularValues();
  Eigen::VectorXcd snapped(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    snapped(i) = sv(i) > 0.5 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
  }
  Matrix diag = Matrix::Zero(space.rows, space.cols);
  diag.diagonal() = snapped;
  return svd.matrixU() * diag * svd.matrixV().adjoint();
}

std::vector<Matrix> search_outside_families(ModuleSpace space, int trials,
                                            std::uint64_t seed,
                                            const ToleranceConfig& tol) {
  std::vector<Matrix> findings;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::derive(seed, "extremal.search",
                          static_cast<std::uint64_t>(space.rows),
                          static_cast<std::uint64_t>(space.cols),
                          static_cast<std::uint64_t>(trial));
    Matrix c = random_tripotent(space, rng);
    ExtremeClassification cls = classify(c, tol);
    if (cls.is_extreme && !cls.family_full_norm && !cls.family_full_range) {
      findings.push_back(std::move(c));
    }
  }
  return findings;
}

}  // namespace matriple
