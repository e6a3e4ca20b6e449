#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "matriple/triple.hpp"
#include "oracles.hpp"

using namespace matriple;

namespace {
const ToleranceConfig tol;

Matrix scalar(Complex v) {
  Matrix m(1, 1);
  m(0, 0) = v;
  return m;
}
}  // namespace

TEST_CASE("triple product, scalar arithmetic oracle") {
  // {1, 2, 3i} = (1*(2*3i) + 3i*(2*1))/2 = 6i
  Matrix t = triple_product(scalar(1), scalar(2), scalar(Complex(0, 3)));
  CHECK(std::abs(t(0, 0) - Complex(0, 6)) <= tol.abs_tol);
}

TEST_CASE("triple product basics") {
  Rng rng(3);
  Matrix x = rng.gaussian_matrix(3, 2);
  Matrix z = rng.gaussian_matrix(3, 2);

  CHECK(op_norm(triple_product(x, Matrix::Zero(3, 2), z)) == 0.0);
  CHECK(op_norm(triple_product(x, x, x) - module_action(x, inner(x, x))) <=
        tol.abs_tol);

  // symmetry in the outer pair, and the naive-loop oracle route
  Matrix y = rng.gaussian_matrix(3, 2);
  CHECK(op_norm(triple_product(x, y, z) - triple_product(z, y, x)) <=
        tol.abs_tol);
  CHECK(op_norm(triple_product(x, y, z) - oracle::triple(x, y, z)) <=
        tol.abs_tol);

  CHECK_THROWS_AS(triple_product(x, y, rng.gaussian_matrix(2, 3)),
                  DimensionMismatch);
}

TEST_CASE("box operator") {
  Rng rng(5);
  Matrix x = rng.gaussian_matrix(2, 2);
  Matrix y = rng.gaussian_matrix(2, 2);
  ModuleSpace sp{2, 2};

  // box(x,y) agrees with (theta(x,y) + R_{<y,x>})/2
  Matrix split = 0.5 * (theta(x, y).rep() + right_mult(inner(y, x), sp).rep());
  CHECK(op_norm(box(x, y).rep() - split) <= tol.abs_tol);

  // and with the closed Kronecker form
  CHECK(op_norm(box(x, y).rep() - box_rep_closed_form(x, y)) <= tol.abs_tol);

  CHECK(op_norm(box(Matrix::Zero(2, 2), y).rep()) == 0.0);

  ModuleOperator unit_box = box(scalar(1), scalar(1));
  CHECK(std::abs(unit_box.rep()(0, 0) - Complex(1, 0)) <= tol.abs_tol);
}

TEST_CASE("jordan residual") {
  CHECK(jordan_residual(Matrix::Zero(2, 2), Matrix::Zero(2, 2),
                        Matrix::Zero(2, 2), Matrix::Zero(2, 2)) == 0.0);

  Rng rng(7);
  Matrix a = rng.gaussian_matrix(2, 2);
  Matrix b = rng.gaussian_matrix(2, 2);
  Matrix c = rng.gaussian_matrix(2, 2);
  Matrix d = rng.gaussian_matrix(2, 2);

  const double scale = 1.0 + op_norm(a) * op_norm(b) * op_norm(c) * op_norm(d);
  CHECK(jordan_residual(a, b, c, d) <= 1e-10 * scale * scale);

  // a=c, b=d: the commutator side is [T,T] = 0
  CHECK(jordan_residual(a, b, a, b) <= 1e-12 * scale * scale);
}

TEST_CASE("box structure report") {
  Rng rng(9);

  BoxStructureReport zero = box_structure_report(Matrix::Zero(2, 2), tol, rng);
  CHECK(zero.decomp_residual == 0.0);
  CHECK(zero.theta_min_eig == 0.0);
  CHECK(zero.rmult_min_eig == 0.0);
  CHECK(zero.box_min_eig == 0.0);
  CHECK(zero.isometry_defect <= tol.composed_tol);
  CHECK(zero.passes(tol));

  // scalar x = 1: box = 1, spectrum {1}
  BoxStructureReport unit = box_structure_report(scalar(1), tol, rng);
  CHECK(unit.theta_min_eig == doctest::Approx(1.0));
  CHECK(unit.rmult_min_eig == doctest::Approx(1.0));
  CHECK(unit.box_min_eig == doctest::Approx(1.0));
  CHECK(unit.passes(tol));

  for (int i = 0; i < 10; ++i) {
    Matrix x = rng.gaussian_matrix(3, 2);
    CHECK(box_structure_report(x, tol, rng).passes(tol));
  }
}

TEST_CASE("cube identity residual") {
  // an isometry is a tripotent of norm one
  Matrix iso = Matrix::Zero(3, 2);
  iso(0, 0) = 1.0;
  iso(1, 1) = 1.0;
  CHECK(op_norm(inner(iso, iso) - Matrix::Identity(2, 2)) == 0.0);
  CHECK(cube_identity_residual(iso) <= tol.abs_tol);

  // x = 2 e11: {x,x,x} = 8 e11, ||x||^3 = 8
  Matrix x = Matrix::Zero(2, 2);
  x(0, 0) = 2.0;
  CHECK(op_norm(triple_product(x, x, x) - 4.0 * x) <= tol.abs_tol);
  CHECK(cube_identity_residual(x) <= tol.abs_tol);

  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    CHECK(cube_identity_residual(rng.gaussian_matrix(2, 3)) <= 1e-10);
  }
}

TEST_CASE("quadratic map") {
  Rng rng(13);
  Matrix x = rng.gaussian_matrix(2, 2);
  CHECK(op_norm(quadratic(Matrix::Zero(2, 2), x)) == 0.0);

  // scalar oracle: c = 2, x = i -> c conj(x) c = -4i
  Matrix q = quadratic(scalar(2), scalar(Complex(0, 1)));
  CHECK(std::abs(q(0, 0) - Complex(0, -4)) <= tol.abs_tol);

  // Q_c(x) = {c,x,c}
  Matrix c = rng.gaussian_matrix(2, 2);
  CHECK(op_norm(quadratic(c, x) - triple_product(c, x, c)) <= tol.abs_tol);

  // Q_c^2(x) = (c (x) c*) (x.|c|^2)
  Matrix lhs = quadratic(c, quadratic(c, x));
  Matrix rhs = theta(c, c).apply(module_action(x, inner(c, c)));
  CHECK(op_norm(lhs - rhs) <= tol.abs_tol * (1.0 + op_norm(lhs)));
}
