#include "matriple/ball.hpp"

#include <cmath>
#include <string>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

namespace matriple {

BallPoint::BallPoint(Matrix x, double norm)
    : element_(std::move(x)), norm_(norm) {}

BallPoint BallPoint::make(Matrix x, const ToleranceConfig& tol) {
  require_finite(x, "BallPoint");
  const double norm = module_norm(x);
  if (!(norm <= 1.0 - 10.0 * tol.abs_tol)) {
    throw OutsideBall("BallPoint: norm " + std::to_string(norm) +
                      " violates the strict-margin ball membership");
  }
  return BallPoint(std::move(x), norm);
}

BallPoint BallPoint::trusted(Matrix x) {
  const double norm = module_norm(x);
  if (!(norm < 1.0)) {
    throw InternalInconsistency(
        "ball map produced a point with norm " + std::to_string(norm));
  }
  return BallPoint(std::move(x), norm);
}

BallPoint BallPoint::negated() const { return BallPoint(-element_, norm_); }

ModuleOperator bergmann(const Matrix& c) {
  ModuleSpace space{c.rows(), c.cols()};
  ModuleOperator cbox = box(c, c);
  Matrix rep = Matrix::Identity(space.dim(), space.dim()) - 2.0 * cbox.rep();
  // Q_c is conjugate-linear, so Q_c^2 is linear and can be assembled
  // column-by-column through a double application.
  ModuleOperator q2 = operator_from_action(space, [&](const Matrix& z) {
    return quadratic(c, quadratic(c, z));
  });
  return ModuleOperator::generic(space, rep + q2.rep());
}

ModuleOperator bergmann_factored(const Matrix& c) {
  const Eigen::Index m = c.rows();
  const Eigen::Index n = c.cols();
  Matrix left = Matrix::Identity(m, m) - c * c.adjoint();
  Matrix right = Matrix::Identity(n, n) - c.adjoint() * c;
  ModuleSpace space{m, n};
  return ModuleOperator::generic(
      space, Eigen::kroneckerProduct(right.transpose().eval(), left));
}

ModuleOperator bergmann_sqrt(const Matrix& c, const ToleranceConfig& tol) {
  const Eigen::Index m = c.rows();
  const Eigen::Index n = c.cols();
  Matrix left;
  Matrix right;
  try {
    left = sqrt_psd(Matrix::Identity(m, m) - c * c.adjoint(), tol);
    right = sqrt_psd(Matrix::Identity(n, n) - c.adjoint() * c, tol);
  } catch (const NotPositive&) {
    throw NotPositive("bergmann_sqrt: ||c|| exceeds 1");
  }
  ModuleSpace space{m, n};
  return ModuleOperator::generic(
      space, Eigen::kroneckerProduct(right.transpose().eval(), left));
}

Inversion mobius_denominator(const BallPoint& c, const BallPoint& x,
                             const ToleranceConfig& tol) {
  Matrix gram = inner(c.element(), x.element());
  const Eigen::Index n = gram.rows();
  return invert(Matrix::Identity(n, n) + gram, tol);
}

Transvection::Transvection(BallPoint center, Matrix sqrt_left, Matrix sqrt_right)
    : center_(std::move(center)),
      sqrt_left_(std::move(sqrt_left)),
      sqrt_right_(std::move(sqrt_right)) {}

Transvection Transvection::make(const BallPoint& center,
                                const ToleranceConfig& tol) {
  const Matrix& c = center.element();
  const Eigen::Index m = c.rows();
  const Eigen::Index n = c.cols();
  Matrix left = sqrt_psd(Matrix::Identity(m, m) - c * c.adjoint(), tol);
  Matrix right = sqrt_psd(Matrix::Identity(n, n) - c.adjoint() * c, tol);
  return Transvection(center, std::move(left), std::move(right));
}

BallPoint transvect(const Transvection& g, const BallPoint& x,
                    const ToleranceConfig& tol) {
  const Matrix& c = g.center().element();
  if (c.rows() != x.element().rows() || c.cols() != x.element().cols()) {
    throw DimensionMismatch("transvect: point and center live in different spaces");
  }
  Inversion den = mobius_denominator(g.center(), x, tol);
  // c + (1-cc*)^{1/2} [ x . (1+<c,x>)^{-1} (1-|c|^2)^{1/2} ], grouped as
  // displayed: the right factor multiplies x from the right as one block.
  Matrix right_block = den.inverse * g.sqrt_right();
  Matrix image = c + g.sqrt_left() * (x.element() * right_block);
  return BallPoint::trusted(std::move(image));
}

double transvect_inverse_check(const BallPoint& c, const BallPoint& x,
                               const ToleranceConfig& tol) {
  Transvection forward = Transvection::make(c, tol);
  Transvection backward = Transvection::make(c.negated(), tol);
  BallPoint y = transvect(forward, x, tol);
  BallPoint z = transvect(backward, y, tol);
  return module_norm(z.element() - x.element());
}

BallPoint apply_automorphism(const ModuleOperator& L, const BallPoint& c,
                             const BallPoint& x, const ToleranceConfig& tol,
                             Rng& rng) {
  ModuleSpace space = L.space();
  if (space.rows != c.element().rows() || space.cols != c.element().cols()) {
    throw DimensionMismatch("apply_automorphism: operator space mismatch");
  }

  auto isometric_on = [&](const Matrix& z) {
    const double nz = module_norm(z);
    return std::abs(module_norm(L.apply(z)) - nz) <= tol.abs_tol * (1.0 + nz);
  };
  for (Eigen::Index k = 0; k < space.dim(); ++k) {
    if (!isometric_on(unvectorize(Eigen::VectorXcd::Unit(space.dim(), k), space))) {
      throw NotIsometry("apply_automorphism: norm not preserved on the basis");
    }
  }
  for (int s = 0; s < tol.sample_count; ++s) {
    if (!isometric_on(rng.gaussian_matrix(space.rows, space.cols))) {
      throw NotIsometry("apply_automorphism: norm not preserved on a sample");
    }
  }

  BallPoint moved = transvect(Transvection::make(c, tol), x, tol);
  return BallPoint::trusted(L.apply(moved.element()));
}

}  // namespace matriple
