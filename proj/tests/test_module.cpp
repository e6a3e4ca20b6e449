#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "matriple/module.hpp"
#include "oracles.hpp"

using namespace matriple;

namespace {
const ToleranceConfig tol;

Matrix m2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix unit_at(Eigen::Index rows, Eigen::Index cols, Eigen::Index i,
               Eigen::Index j) {
  Matrix e = Matrix::Zero(rows, cols);
  e(i, j) = Complex(1.0, 0.0);
  return e;
}
}  // namespace

TEST_CASE("vectorize is column-major") {
  Matrix x = m2(1, 3, 2, 4);  // columns (1,2) and (3,4)
  Eigen::VectorXcd v = vectorize(x);
  CHECK(v(0) == Complex(1, 0));
  CHECK(v(1) == Complex(2, 0));
  CHECK(v(2) == Complex(3, 0));
  CHECK(v(3) == Complex(4, 0));
  CHECK(op_norm(unvectorize(v, ModuleSpace{2, 2}) - x) == 0.0);
  CHECK_THROWS_AS(unvectorize(v, ModuleSpace{3, 2}), DimensionMismatch);
}

TEST_CASE("tagged operators match their closed forms") {
  ModuleSpace sp{3, 2};
  Rng rng(3);
  Matrix big = rng.gaussian_matrix(3, 3);
  Matrix small = rng.gaussian_matrix(2, 2);

  ModuleOperator lm = ModuleOperator::left_multiplier(sp, big);
  ModuleOperator rm = ModuleOperator::right_multiplier(sp, small);
  for (int i = 0; i < 5; ++i) {
    Matrix z = rng.gaussian_matrix(3, 2);
    CHECK(op_norm(lm.apply(z) - big * z) <= tol.abs_tol);
    CHECK(op_norm(rm.apply(z) - z * small) <= tol.abs_tol);
    // the (mn)x(mn) representation agrees with the closed form
    CHECK(op_norm(unvectorize(lm.rep() * vectorize(z), sp) - big * z) <=
          tol.abs_tol);
    CHECK(op_norm(unvectorize(rm.rep() * vectorize(z), sp) - z * small) <=
          tol.abs_tol);
  }

  CHECK(ModuleOperator::identity(sp).apply(big.topRows(3).leftCols(2)) ==
        big.topRows(3).leftCols(2));
  CHECK_THROWS_AS(ModuleOperator::left_multiplier(sp, small),
                  DimensionMismatch);
  CHECK_THROWS_AS(lm.apply(rng.gaussian_matrix(2, 2)), DimensionMismatch);
  CHECK_THROWS_AS(ModuleOperator::generic(sp, big), DimensionMismatch);
}

TEST_CASE("composition keeps same-kind tags") {
  ModuleSpace sp{2, 2};
  Rng rng(5);
  Matrix a = rng.gaussian_matrix(2, 2);
  Matrix b = rng.gaussian_matrix(2, 2);

  ModuleOperator ll = compose(ModuleOperator::left_multiplier(sp, a),
                              ModuleOperator::left_multiplier(sp, b));
  CHECK(ll.tag() == ModuleOperator::Tag::LeftMultiplier);
  CHECK(op_norm(ll.factor() - a * b) <= tol.abs_tol);

  ModuleOperator rr = compose(right_mult(a, sp), right_mult(b, sp));
  CHECK(rr.tag() == ModuleOperator::Tag::RightMultiplier);
  // (R_a o R_b)(z) = (z b) a = z (b a)
  CHECK(op_norm(rr.factor() - b * a) <= tol.abs_tol);

  ModuleOperator mixed =
      compose(ModuleOperator::left_multiplier(sp, a), right_mult(b, sp));
  CHECK(mixed.tag() == ModuleOperator::Tag::Generic);
  CHECK_THROWS_AS(mixed.factor(), Error);
}

TEST_CASE("inner product") {
  Matrix id = Matrix::Identity(2, 2);
  CHECK(op_norm(inner(id, id) - id) == 0.0);

  Matrix x = m2(0, 1, 0, 0);
  CHECK(op_norm(inner(x, x) - m2(0, 0, 0, 1)) == 0.0);

  Rng rng(7);
  Matrix y = rng.gaussian_matrix(3, 2);
  Matrix z = rng.gaussian_matrix(3, 2);
  // conjugate symmetry and the oracle route
  CHECK(op_norm(inner(y, z) - adjoint(inner(z, y))) <= tol.abs_tol);
  CHECK(op_norm(inner(y, z) - oracle::mul(oracle::adj(y), z)) <= tol.abs_tol);

  Matrix a = rng.gaussian_matrix(2, 2);
  CHECK(op_norm(inner(y, module_action(z, a)) - inner(y, z) * a) <=
        tol.abs_tol);

  CHECK_THROWS_AS(inner(y, rng.gaussian_matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("module action") {
  Rng rng(9);
  Matrix x = rng.gaussian_matrix(2, 3);
  CHECK(op_norm(module_action(x, Matrix::Identity(3, 3)) - x) == 0.0);

  Matrix a = rng.gaussian_matrix(3, 3);
  const Complex lambda(0, 2);
  CHECK(op_norm(module_action(lambda * x, a) - module_action(x, lambda * a)) <=
        tol.abs_tol);
  CHECK(op_norm(lambda * module_action(x, a) - module_action(lambda * x, a)) <=
        tol.abs_tol);

  Matrix proj = m2(1, 0, 0, 0);
  CHECK(op_norm(module_action(Matrix::Identity(2, 2), proj) - proj) == 0.0);

  CHECK_THROWS_AS(module_action(x, m2(1, 0, 0, 1)), DimensionMismatch);
}

TEST_CASE("module norm") {
  CHECK(module_norm(3.0 * Matrix::Identity(2, 2)) == doctest::Approx(3.0));
  CHECK(module_norm(m2(1, 0, 0, 0.5)) == doctest::Approx(1.0));

  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    Matrix x = rng.gaussian_matrix(3, 2);
    Matrix y = rng.gaussian_matrix(3, 2);
    CHECK(module_norm(x + y) <= module_norm(x) + module_norm(y) + tol.abs_tol);
    CHECK(module_norm(x) * module_norm(x) ==
          doctest::Approx(op_norm(inner(x, x))));
    Matrix a = rng.gaussian_matrix(2, 2);
    CHECK(module_norm(module_action(x, a)) <=
          module_norm(x) * op_norm(a) + tol.abs_tol);
  }
}

TEST_CASE("a_valued_norm") {
  Matrix iso(2, 1);
  iso << Complex(1, 0), Complex(0, 0);
  CHECK(op_norm(a_valued_norm(iso, tol) - Matrix::Identity(1, 1)) <=
        tol.composed_tol);

  Matrix x = m2(0, 2, 0, 0);
  CHECK(op_norm(a_valued_norm(x, tol) - m2(0, 0, 0, 2)) <= tol.composed_tol);

  Rng rng(13);
  Matrix y = rng.gaussian_matrix(3, 2);
  CHECK(op_norm(a_valued_norm(y, tol)) ==
        doctest::Approx(module_norm(y)).epsilon(1e-8));
}

TEST_CASE("theta") {
  Rng rng(15);
  Matrix x = rng.gaussian_matrix(2, 2);
  Matrix y = rng.gaussian_matrix(2, 2);

  ModuleOperator th = theta(x, y);
  CHECK(th.tag() == ModuleOperator::Tag::LeftMultiplier);
  CHECK(op_norm(th.factor() - x * adjoint(y)) <= tol.abs_tol);

  // theta(x,x) x = x.<x,x>
  CHECK(op_norm(theta(x, x).apply(x) - module_action(x, inner(x, x))) <=
        tol.abs_tol);

  Matrix e11 = unit_at(2, 2, 0, 0);
  CHECK(op_norm(theta(e11, e11).factor() - m2(1, 0, 0, 0)) == 0.0);

  OperatorAdjoint ad = adjoint_op(th, tol);
  CHECK(ad.a_adjointable);
  CHECK(op_norm(ad.op.rep() - theta(y, x).rep()) <= tol.abs_tol);
}

TEST_CASE("right multiplication") {
  ModuleSpace sp{2, 2};
  Rng rng(17);

  CHECK(op_norm(right_mult(Matrix::Identity(2, 2), sp).rep() -
                Matrix::Identity(4, 4)) == 0.0);

  Matrix a = rng.gaussian_matrix(2, 2);
  Matrix b = rng.gaussian_matrix(2, 2);
  CHECK(op_norm(compose(right_mult(a, sp), right_mult(b, sp)).rep() -
                right_mult(b * a, sp).rep()) <= tol.abs_tol);

  // operator exponential route = algebra exponential route
  Matrix x = rng.gaussian_matrix(2, 2);
  Matrix h = inner(x, x);
  for (double t : {0.5, -1.0}) {
    Matrix lhs = unitary_exp(right_mult(h, sp).rep(), t, tol);
    Matrix rhs = right_mult(unitary_exp(h, t, tol), sp).rep();
    CHECK(op_norm(lhs - rhs) <= tol.composed_tol);
    // and it acts as an isometry of E
    Matrix w = rng.gaussian_matrix(2, 2);
    CHECK(module_norm(unvectorize(lhs * vectorize(w), sp)) ==
          doctest::Approx(module_norm(w)).epsilon(1e-9));
  }

  CHECK_THROWS_AS(right_mult(rng.gaussian_matrix(3, 3), sp),
                  DimensionMismatch);
}

TEST_CASE("adjoint_op on generic operators: trace-pairing oracle") {
  ModuleSpace sp{2, 3};
  Rng rng(19);
  ModuleOperator f = ModuleOperator::generic(sp, rng.gaussian_matrix(6, 6));
  OperatorAdjoint ad = adjoint_op(f, tol);
  for (int i = 0; i < 10; ++i) {
    Matrix x = rng.gaussian_matrix(2, 3);
    Matrix y = rng.gaussian_matrix(2, 3);
    Complex lhs = oracle::trace_pairing(f.apply(x), y);
    Complex rhs = oracle::trace_pairing(x, ad.op.apply(y));
    CHECK(std::abs(lhs - rhs) <= tol.abs_tol * (1.0 + std::abs(lhs)));
  }
  // involution
  CHECK(op_norm(adjoint_op(ad.op, tol).op.rep() - f.rep()) <= tol.abs_tol);
}

TEST_CASE("adjoint_op flags A-adjointability") {
  ModuleSpace sp{2, 2};
  Rng rng(21);

  Matrix m = rng.gaussian_matrix(2, 2);
  OperatorAdjoint left = adjoint_op(ModuleOperator::left_multiplier(sp, m), tol);
  CHECK(left.a_adjointable);
  CHECK(left.op.tag() == ModuleOperator::Tag::LeftMultiplier);
  CHECK(op_norm(left.op.factor() - adjoint(m)) <= tol.abs_tol);

  // a non-central right multiplier is not an A-map
  Matrix e11 = m2(1, 0, 0, 0);
  OperatorAdjoint right = adjoint_op(right_mult(e11, sp), tol);
  CHECK_FALSE(right.a_adjointable);

  // central right multipliers are
  OperatorAdjoint central =
      adjoint_op(right_mult(Complex(0, 3) * Matrix::Identity(2, 2), sp), tol);
  CHECK(central.a_adjointable);
}

TEST_CASE("is_a_linear") {
  ModuleSpace sp{2, 2};
  Rng rng(23);

  CHECK(is_a_linear(ModuleOperator::left_multiplier(sp, rng.gaussian_matrix(2, 2)),
                    tol, rng));
  CHECK(is_a_linear(theta(rng.gaussian_matrix(2, 2), rng.gaussian_matrix(2, 2)),
                    tol, rng));

  // witness: x = e11, b = e12 gives x b a != x a b for a = e11
  Matrix a = m2(1, 0, 0, 0);
  Matrix x = m2(1, 0, 0, 0);
  Matrix b = m2(0, 1, 0, 0);
  CHECK(op_norm(oracle::mul(oracle::mul(x, b), a) -
                oracle::mul(oracle::mul(x, a), b)) > 0.5);
  CHECK_FALSE(is_a_linear(right_mult(a, sp), tol, rng));
  CHECK(is_a_linear(right_mult(2.0 * Matrix::Identity(2, 2), sp), tol, rng));
}

TEST_CASE("left_factor") {
  ModuleSpace sp{3, 2};
  Rng rng(25);
  Matrix m = rng.gaussian_matrix(3, 3);
  ModuleOperator f = ModuleOperator::generic(
      sp, ModuleOperator::left_multiplier(sp, m).rep());
  CHECK(op_norm(left_factor(f, tol) - m) <= tol.abs_tol);

  CHECK_THROWS_AS(left_factor(right_mult(m2(1, 0, 0, 0), ModuleSpace{2, 2}), tol),
                  NotALinear);
}

TEST_CASE("is_positive_op") {
  ModuleSpace sp{2, 2};
  Rng rng(27);

  Matrix x = rng.gaussian_matrix(2, 2);
  CHECK(is_positive_op(theta(x, x), tol, rng));
  CHECK(is_positive_op(ModuleOperator::identity(sp), tol, rng));

  // witness from the pairing route: <e21, f(e21)> = -e11
  Matrix indef = m2(1, 0, 0, -1);
  Matrix e21 = unit_at(2, 2, 1, 0);
  Matrix pairing = inner(e21, indef * e21);
  CHECK(op_norm(pairing - m2(-1, 0, 0, 0)) <= tol.abs_tol);
  CHECK_FALSE(is_positive_op(ModuleOperator::left_multiplier(sp, indef), tol, rng));

  CHECK_THROWS_AS(is_positive_op(right_mult(m2(1, 0, 0, 0), sp), tol, rng),
                  NotALinear);
}

TEST_CASE("positivity cross-validation on random selfadjoint operators") {
  ModuleSpace sp{3, 2};
  Rng rng(29);
  for (int i = 0; i < 50; ++i) {
    Matrix g = rng.gaussian_matrix(3, 3);
    Matrix h = 0.5 * (g + adjoint(g));
    ModuleOperator f = ModuleOperator::left_multiplier(sp, h);
    CHECK_NOTHROW((void)is_positive_op(f, tol, rng));
  }
}

TEST_CASE("cauchy-schwarz residual") {
  Rng rng(31);
  Matrix x = rng.gaussian_matrix(3, 2);
  CHECK(cauchy_schwarz_residual(x, x) >= -tol.abs_tol);

  // orthogonal pair: x* y = 0
  Matrix xo = Matrix::Zero(2, 2);
  xo(0, 0) = 1.0;
  Matrix yo = Matrix::Zero(2, 2);
  yo(1, 1) = 1.0;
  CHECK(op_norm(inner(xo, yo)) == 0.0);
  CHECK(cauchy_schwarz_residual(xo, yo) >= -tol.abs_tol);

  for (int i = 0; i < 50; ++i) {
    Matrix a = rng.gaussian_matrix(3, 2);
    Matrix b = rng.gaussian_matrix(3, 2);
    CHECK(cauchy_schwarz_residual(a, b) >= -1e-12 * (1.0 + op_norm(a) * op_norm(b)));
  }
}
