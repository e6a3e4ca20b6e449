#include "matriple/module.hpp"

#include <string>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

namespace matriple {

namespace {

void require_space(const Matrix& x, ModuleSpace space, const char* who) {
  if (x.rows() != space.rows || x.cols() != space.cols) {
    throw DimensionMismatch(std::string(who) + ": element is " +
                            std::to_string(x.rows()) + "x" +
                            std::to_string(x.cols()) + ", space wants " +
                            std::to_string(space.rows) + "x" +
                            std::to_string(space.cols));
  }
}

void require_same_space(const Matrix& x, const Matrix& y, const char* who) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionMismatch(std::string(who) + ": operands live in different spaces");
  }
}

Matrix basis_element(ModuleSpace space, Eigen::Index k) {
  Matrix e = Matrix::Zero(space.rows, space.cols);
  // Column-major flat index, matching vectorize().
  e(k % space.rows, k / space.rows) = Complex(1.0, 0.0);
  return e;
}

}  // namespace

Eigen::VectorXcd vectorize(const Matrix& x) {
  return Eigen::Map<const Eigen::VectorXcd>(x.data(), x.size());
}

Matrix unvectorize(const Eigen::VectorXcd& v, ModuleSpace space) {
  if (v.size() != space.dim()) {
    throw DimensionMismatch("unvectorize: vector length does not match space");
  }
  return Eigen::Map<const Matrix>(v.data(), space.rows, space.cols);
}

ModuleOperator::ModuleOperator(ModuleSpace space, Matrix rep, Tag tag,
                               Matrix factor)
    : space_(space), rep_(std::move(rep)), tag_(tag), factor_(std::move(factor)) {}

ModuleOperator ModuleOperator::generic(ModuleSpace space, Matrix rep) {
  if (rep.rows() != space.dim() || rep.cols() != space.dim()) {
    throw DimensionMismatch("ModuleOperator: rep must be (mn)x(mn)");
  }
  return ModuleOperator(space, std::move(rep), Tag::Generic, Matrix());
}

ModuleOperator ModuleOperator::left_multiplier(ModuleSpace space, Matrix factor) {
  if (factor.rows() != space.rows || factor.cols() != space.rows) {
    throw DimensionMismatch("left_multiplier: factor must be m x m");
  }
  Matrix rep = Eigen::kroneckerProduct(
      Matrix::Identity(space.cols, space.cols), factor);
  return ModuleOperator(space, std::move(rep), Tag::LeftMultiplier,
                        std::move(factor));
}

ModuleOperator ModuleOperator::right_multiplier(ModuleSpace space, Matrix factor) {
  if (factor.rows() != space.cols || factor.cols() != space.cols) {
    throw DimensionMismatch("right_multiplier: factor must be n x n");
  }
  Matrix rep = Eigen::kroneckerProduct(
      factor.transpose().eval(), Matrix::Identity(space.rows, space.rows));
  return ModuleOperator(space, std::move(rep), Tag::RightMultiplier,
                        std::move(factor));
}

ModuleOperator ModuleOperator::identity(ModuleSpace space) {
  return left_multiplier(space, Matrix::Identity(space.rows, space.rows));
}

Matrix ModuleOperator::apply(const Matrix& x) const {
  require_space(x, space_, "ModuleOperator::apply");
  switch (tag_) {
    case Tag::LeftMultiplier:
      return factor_ * x;
    case Tag::RightMultiplier:
      return x * factor_;
    case Tag::Generic:
      break;
  }
  return unvectorize(rep_ * vectorize(x), space_);
}

const Matrix& ModuleOperator::factor() const {
  if (tag_ == Tag::Generic) {
    throw Error("ModuleOperator::factor: generic operator has no tag payload");
  }
  return factor_;
}

double ModuleOperator::norm() const { return op_norm(rep_); }

ModuleOperator compose(const ModuleOperator& f, const ModuleOperator& g) {
  if (!(f.space() == g.space())) {
    throw DimensionMismatch("compose: operators act on different spaces");
  }
  using Tag = ModuleOperator::Tag;
  if (f.tag() == Tag::LeftMultiplier && g.tag() == Tag::LeftMultiplier) {
    return ModuleOperator::left_multiplier(f.space(), f.factor() * g.factor());
  }
  if (f.tag() == Tag::RightMultiplier && g.tag() == Tag::RightMultiplier) {
    // (f o g)(z) = (z g) f-factor applied second: z -> z * (g-factor * f-factor).
    return ModuleOperator::right_multiplier(f.space(),
                                            g.factor() * f.factor());
  }
  return ModuleOperator::generic(f.space(), f.rep() * g.rep());
}

ModuleOperator operator_from_action(
    ModuleSpace space, const std::function<Matrix(const Matrix&)>& action) {
  const Eigen::Index d = space.dim();
  Matrix rep(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    Matrix image = action(basis_element(space, k));
    require_space(image, space, "operator_from_action");
    rep.col(k) = vectorize(image);
  }
  return ModuleOperator::generic(space, std::move(rep));
}

Matrix inner(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionMismatch("inner: operands live in different spaces");
  }
  return x.adjoint() * y;
}

Matrix module_action(const Matrix& x, const Matrix& a) {
  require_square(a, "module_action");
  if (x.cols() != a.rows()) {
    throw DimensionMismatch("module_action: cols(x) must equal dim(a)");
  }
  return x * a;
}

double module_norm(const Matrix& x) { return op_norm(x); }

Matrix a_valued_norm(const Matrix& x, const ToleranceConfig& tol) {
  return sqrt_psd(inner(x, x), tol);
}

ModuleOperator theta(const Matrix& x, const Matrix& y) {
  require_same_space(x, y, "theta");
  ModuleSpace space{x.rows(), x.cols()};
  return ModuleOperator::left_multiplier(space, x * y.adjoint());
}

ModuleOperator right_mult(const Matrix& a, ModuleSpace space) {
  require_square(a, "right_mult");
  if (a.rows() != space.cols) {
    throw DimensionMismatch("right_mult: dim(a) must equal n of the space");
  }
  return ModuleOperator::right_multiplier(space, a);
}

OperatorAdjoint adjoint_op(const ModuleOperator& f, const ToleranceConfig& tol) {
  using Tag = ModuleOperator::Tag;
  ModuleSpace space = f.space();

  ModuleOperator adj = [&] {
    switch (f.tag()) {
      case Tag::LeftMultiplier:
        return ModuleOperator::left_multiplier(space, f.factor().adjoint());
      case Tag::RightMultiplier:
        return ModuleOperator::right_multiplier(space, f.factor().adjoint());
      case Tag::Generic:
      default:
        return ModuleOperator::generic(space, f.rep().adjoint());
    }
  }();

  // <f(e_k), e_l> = <e_k, adj(e_l)> over the standard basis decides whether
  // the trace adjoint is also the A-valued one.
  bool a_adjointable = true;
  const Eigen::Index d = space.dim();
  for (Eigen::Index k = 0; k < d && a_adjointable; ++k) {
    Matrix ek = unvectorize(Eigen::VectorXcd::Unit(d, k), space);
    Matrix f_ek = f.apply(ek);
    for (Eigen::Index l = 0; l < d; ++l) {
      Matrix el = unvectorize(Eigen::VectorXcd::Unit(d, l), space);
      Matrix lhs = inner(f_ek, el);
      Matrix rhs = inner(ek, adj.apply(el));
      if (op_norm(lhs - rhs) > tol.abs_tol * (1.0 + op_norm(lhs))) {
        a_adjointable = false;
        break;
      }
    }
  }
  return OperatorAdjoint{std::move(adj), a_adjointable};
}

bool is_a_linear(const ModuleOperator& f, const ToleranceConfig& tol, Rng& rng) {
  ModuleSpace space = f.space();
  const Eigen::Index n = space.cols;
  const double scale = 1.0 + f.norm();

  auto commutes = [&](const Matrix& x, const Matrix& a) {
    Matrix lhs = f.apply(module_action(x, a));
    Matrix rhs = module_action(f.apply(x), a);
    return op_norm(lhs - rhs) <=
           tol.abs_tol * scale * (1.0 + op_norm(x) * op_norm(a));
  };

  for (Eigen::Index k = 0; k < space.dim(); ++k) {
    Matrix x = basis_element(space, k);
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = 0; q < n; ++q) {
        Matrix a = Matrix::Zero(n, n);
        a(p, q) = Complex(1.0, 0.0);
        if (!commutes(x, a)) return false;
      }
    }
  }
  for (int s = 0; s < tol.sample_count; ++s) {
    if (!commutes(rng.gaussian_matrix(space.rows, space.cols),
                  rng.gaussian_matrix(n, n))) {
      return false;
    }
  }
  return true;
}

Matrix left_factor(const ModuleOperator& f, const ToleranceConfig& tol) {
  ModuleSpace space = f.space();
  const Eigen::Index m = space.rows;
  if (f.tag() == ModuleOperator::Tag::LeftMultiplier) return f.factor();

  // A left multiplication has rep I_n (x) M; read M off the first block and
  // verify the whole rep against it.
  Matrix candidate = f.rep().topLeftCorner(m, m);
  Matrix expected = Eigen::kroneckerProduct(
      Matrix::Identity(space.cols, space.cols), candidate);
  if (op_norm(f.rep() - expected) >
      tol.abs_tol * (1.0 + op_norm(candidate))) {
    throw NotALinear("left_factor: operator is not a left multiplication");
  }
  return candidate;
}

bool is_positive_op(const ModuleOperator& f, const ToleranceConfig& tol,
                    Rng& rng) {
  ModuleSpace space = f.space();
  Matrix factor = left_factor(f, tol);  // throws NotALinear when misused

  // Route (i): the spectrum of the recovered factor.
  bool spectral;
  if (!is_hermitian(factor, tol)) {
    spectral = false;
  } else {
    spectral = min_eigenvalue_hermitian(factor, tol) >= -tol.abs_tol;
  }

  // Route (ii): <x, f(x)> >= 0 over the standard basis and sampled draws.
  auto pairing_ok = [&](const Matrix& x) {
    Matrix h = inner(x, f.apply(x));
    if (!is_hermitian(h, tol)) return false;
    return min_eigenvalue_hermitian(0.5 * (h + h.adjoint()), tol) >=
           -tol.abs_tol * (1.0 + op_norm(h));
  };

  bool sampled = true;
  for (Eigen::Index k = 0; k < space.dim() && sampled; ++k) {
    Eigen::VectorXcd unit = Eigen::VectorXcd::Unit(space.dim(), k);
    sampled = pairing_ok(unvectorize(unit, space));
  }
  for (int s = 0; s < tol.sample_count && sampled; ++s) {
    sampled = pairing_ok(rng.gaussian_matrix(space.rows, space.cols));
  }

  if (spectral != sampled) {
    throw InternalInconsistency(
        "is_positive_op: spectral and sampled positivity tests disagree");
  }
  return spectral;
}

double cauchy_schwarz_residual(const Matrix& x, const Matrix& y) {
  require_same_space(x, y, "cauchy_schwarz_residual");
  Matrix gram_x = inner(x, x);
  Matrix diff = op_norm(gram_x) * inner(y, y) - inner(y, x) * inner(x, y);
  Matrix h = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  return es.eigenvalues()(0);
}

}  // namespace matriple
