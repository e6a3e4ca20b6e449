#include "matriple/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstring>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace matriple {

namespace {

constexpr double kErrorResidual = 1e300;

// ------------------------------------------------------------------
// fault-aware evaluation routes
//
// Fault::None delegates to the production functions; an injected fault
// swaps in the deliberately broken variant so the suites can prove they
// would catch it.

Matrix eval_triple(Fault fault, const Matrix& x, const Matrix& y,
                   const Matrix& z) {
  if (fault != Fault::TripleSignFlip) return triple_product(x, y, z);
  return 0.5 * (module_action(x, inner(y, z)) - module_action(z, inner(y, x)));
}

ModuleOperator eval_box(Fault fault, const Matrix& x, const Matrix& y) {
  if (fault != Fault::TripleSignFlip) return box(x, y);
  ModuleSpace space{x.rows(), x.cols()};
  return operator_from_action(
      space, [&](const Matrix& z) { return eval_triple(fault, x, y, z); });
}

Matrix eval_quadratic(Fault fault, const Matrix& c, const Matrix& x) {
  if (fault != Fault::TripleSignFlip) return quadratic(c, x);
  return eval_triple(fault, c, x, c);
}

ModuleOperator eval_bergmann(Fault fault, const Matrix& c) {
  if (fault != Fault::TripleSignFlip) return bergmann(c);
  ModuleSpace space{c.rows(), c.cols()};
  ModuleOperator cbox = eval_box(fault, c, c);
  ModuleOperator q2 = operator_from_action(space, [&](const Matrix& z) {
    return eval_quadratic(fault, c, eval_quadratic(fault, c, z));
  });
  Matrix rep = Matrix::Identity(space.dim(), space.dim()) - 2.0 * cbox.rep() +
               q2.rep();
  return ModuleOperator::generic(space, std::move(rep));
}

ModuleOperator eval_bergmann_sqrt(Fault fault, const Matrix& c,
                                  const ToleranceConfig& tol) {
  if (fault != Fault::BergmannSqrtSkip) return bergmann_sqrt(c, tol);
  // Broken on purpose: the left factor keeps its full power instead of
  // its square root.
  const Eigen::Index m = c.rows();
  const Eigen::Index n = c.cols();
  Matrix left = Matrix::Identity(m, m) - c * c.adjoint();
  Matrix right = sqrt_psd(Matrix::Identity(n, n) - c.adjoint() * c, tol);
  ModuleSpace space{m, n};
  return operator_from_action(
      space, [&](const Matrix& z) { return left * z * right; });
}

double eval_jordan(Fault fault, const Matrix& a, const Matrix& b,
                   const Matrix& c, const Matrix& d) {
  if (fault != Fault::TripleSignFlip) return jordan_residual(a, b, c, d);
  ModuleOperator ab = eval_box(fault, a, b);
  ModuleOperator cd = eval_box(fault, c, d);
  Matrix commutator = ab.rep() * cd.rep() - cd.rep() * ab.rep();
  Matrix rhs = eval_box(fault, eval_triple(fault, a, b, c), d).rep() -
               eval_box(fault, c, eval_triple(fault, d, a, b)).rep();
  return op_norm(commutator - rhs);
}

// ------------------------------------------------------------------
// input drawing

Matrix scaled_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng,
                       double max_norm) {
  Matrix g = rng.gaussian_matrix(rows, cols);
  const double norm = op_norm(g);
  const double target = max_norm * rng.uniform();
  if (norm == 0.0) return g;
  return g * (target / norm);
}

Matrix random_unitary(Eigen::Index n, Rng& rng) {
  Matrix g = rng.gaussian_matrix(n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(n, n);
}

Matrix orthonormal_columns(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Matrix g = rng.gaussian_matrix(rows, cols);
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(rows, cols);
}

Matrix draw_input(char kind, ModuleSpace space, Rng& rng,
                  const ToleranceConfig& tol) {
  switch (kind) {
    case 'M':
      return scaled_gaussian(space.rows, space.cols, rng, 1.5);
    case 'A':
      return scaled_gaussian(space.cols, space.cols, rng, 1.5);
    case 'L':
      return scaled_gaussian(space.rows, space.rows, rng, 1.5);
    case 's': {
      Matrix s(1, 1);
      s(0, 0) = rng.gaussian_complex();
      return s;
    }
    case 'r': {
      Matrix s(1, 1);
      s(0, 0) = Complex(rng.uniform(-2.0, 2.0), 0.0);
      return s;
    }
    case 'B':
      return generate_ball_point(space, rng, tol).element();
    case 'T':
      return random_tripotent(space, rng);
    case 'u':
      return random_unitary(space.rows, rng);
    case 'v':
      return random_unitary(space.cols, rng);
    default:
      throw Error(std::string("draw_input: unknown input kind '") + kind + "'");
  }
}

// ------------------------------------------------------------------
// property registry

struct EvalContext {
  ModuleSpace space;
  ToleranceConfig tol;
  Fault fault = Fault::None;
  Rng* rng = nullptr;
  long trials = 0;                   // for whole-dimension properties
  std::uint64_t seed = 0;            // for per-trial derivation inside evals
  std::filesystem::path fixtures_dir;
};

enum class Th { Abs, Composed, One, Half, Fixed };

struct Property {
  const char* name;
  const char* law;
  Suite suite;
  const char* inputs;  // one char per drawn matrix; empty for whole-dim
  Th th;
  double th_fixed;
  double (*eval)(EvalContext&, const std::vector<Matrix>&);
  bool (*applicable)(ModuleSpace);
  bool whole_dim;
};

double threshold_of(const Property& p, const ToleranceConfig& tol) {
  switch (p.th) {
    case Th::Abs:
      return tol.abs_tol;
    case Th::Composed:
      return tol.composed_tol;
    case Th::One:
      return 1.0;
    case Th::Half:
      return 0.5;
    case Th::Fixed:
      return p.th_fixed;
  }
  return tol.abs_tol;
}

Matrix hermitian_part(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

double min_eig(const Matrix& rep) {
  return Eigen::SelfAdjointEigenSolver<Matrix>(hermitian_part(rep))
      .eigenvalues()(0);
}

// (g* g)^{1/2} through the SVD of g itself.  Eigendecomposing g* g squares
// the condition number and costs half the digits at rank deficiencies;
// this route keeps the modulus accurate to machine precision.
Matrix psd_modulus(const Matrix& g) {
  Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeFullV);
  return svd.matrixV() * svd.singularValues().cast<Complex>().asDiagonal() *
         svd.matrixV().adjoint();
}

// --- module suite -------------------------------------------------

double p_cstar_identity(EvalContext&, const std::vector<Matrix>& in) {
  const Matrix& a = in[0];
  const double na = op_norm(a);
  return std::abs(op_norm(a.adjoint() * a) - na * na) / (1.0 + na * na);
}

double p_sqrt_reconstruct(EvalContext& ctx, const std::vector<Matrix>& in) {
  Matrix p = in[0].adjoint() * in[0];
  Matrix r = sqrt_psd(p, ctx.tol);
  return op_norm(r * r - p) / (1.0 + op_norm(p));
}

double p_sqrt_scaling(EvalContext& ctx, const std::vector<Matrix>& in) {
  Matrix p = in[0].adjoint() * in[0];
  const double s = std::abs(in[1](0, 0).real()) + 0.5;
  Matrix lhs = sqrt_psd((s * s) * p, ctx.tol);
  Matrix rhs = s * sqrt_psd(p, ctx.tol);
  return op_norm(lhs - rhs) / (1.0 + op_norm(rhs));
}

double p_unitary_exp_inverse(EvalContext& ctx, const std::vector<Matrix>& in) {
  Matrix h = hermitian_part(in[0]);
  const double t = in[1](0, 0).real();
  Matrix u = unitary_exp(h, t, ctx.tol);
  Matrix v = unitary_exp(h, -t, ctx.tol);
  return op_norm(u * v - Matrix::Identity(h.rows(), h.cols()));
}

double p_spectrum_trace(EvalContext& ctx, const std::vector<Matrix>& in) {
  Matrix h = hermitian_part(in[0]);
  Eigen::VectorXd ev = spectrum_hermitian(h, ctx.tol);
  return std::abs(ev.sum() - h.trace().real()) /
         static_cast<double>(h.rows());
}

double p_inner_linear(EvalContext&, const std::vector<Matrix>& in) {
  const Matrix& x = in[0];
  const Matrix& y = in[1];
  const Matrix& z = in[2];
  const Complex alpha = in[3](0, 0);
  const Complex beta = in[4](0, 0);
  Matrix lhs = inner(x, alpha * y + beta * z);
  Matrix rhs = alpha * inner(x, y) + beta * inner(x, z);
  return op_norm(lhs - rhs);
}

double p_inner_conjugate_symmetry(EvalContext&, const std::vector<Matrix>& in) {
  return op_norm(inner(in[1], in[0]) - inner(in[0], in[1]).adjoint());
}

double p_inner_positive(EvalContext& ctx, const std::vector<Matrix>& in) {
  const Matrix& x = in[0];
  Matrix gram = inner(x, x);
  double res = std::max(0.0, -min_eig(gram));
  if (op_norm(gram) <= ctx.tol.abs_tol &&
      x.norm() > 10.0 * std::sqrt(ctx.tol.abs_tol)) {
    res = std::max(res, 1.0);  // definiteness: <x,x> = 0 forces x = 0
  }
  return res;
}

double p_inner_norm_bound(EvalContext&, const std::vector<Matrix>& in) {
  return std::max(0.0, op_norm(inner(in[0], in[1])) -
                           module_norm(in[0]) * module_norm(in[1]));
}

double p_inner_loewner_right(EvalContext&, const std::vector<Matrix>& in) {
  Matrix bound = module_norm(in[0]) * psd_modulus(in[1]);
  return std::max(0.0, -min_eig(bound - psd_modulus(inner(in[0], in[1]))));
}

double p_inner_loewner_left(EvalContext&, const std::vector<Matrix>& in) {
  Matrix bound = module_norm(in[1]) * psd_modulus(in[0]);
  return std::max(0.0, -min_eig(bound - psd_modulus(inner(in[1], in[0]))));
}

double p_inner_action_compat(EvalContext&, const std::vector<Matrix>& in) {
  const Matrix& x = in[0];
  const Matrix& y = in[1];
  const Matrix& a = in[2];
  return op_norm(inner(x, module_action(y, a)) - inner(x, y) * a);
}

double p_action_assoc(EvalContext&, const std::vector<Matrix>& in) {
  const Matrix& x = in[0];
  const Matrix& a = in[1];
  const Matrix& b = in[2];
  return op_norm(module_action(module_action(x, a), b) -
                 module_action(x, a * b));
}

double p_action_scalar(EvalContext&, const std::vector<Matrix>& in) {
  const Matrix& x = in[0];
  const Matrix& a = in[1];
  const Complex lambda = in[2](0, 0);
  double r1 = op_norm(module_action(lambda * x, a) -
                      module_action(x, lambda * a));
  double r2 = op_norm(lambda * module_action(x, a) -
                      module_action(lambda * x, a));
  return std::max(r1, r2);
}

double p_action_norm_bound(EvalContext&, const std::vector<Matrix>& in) {
  return std::max(0.0, module_norm(module_action(in[0], in[1])) -
                           module_norm(in[0]) * op_norm(in[1]));
}

double p_theta_adjoint(EvalContext& ctx, const std::vector<Matrix>& in) {
  ModuleOperator th_xy = theta(in[0], in[1]);
  OperatorAdjoint ad = adjoint_op(th_xy, ctx.tol);
  double res = op_norm(ad.op.rep() - theta(in[1], in[0]).rep());
  if (!ad.a_adjointable) res = std::max(res, 1.0);
  OperatorAdjoint ad2 = adjoint_op(ad.op, ctx.tol);
  return std::max(res, op_norm(ad2.op.rep() - th_xy.rep()));
}

double p_rmult_compose(EvalContext& ctx, const std::vector<Matrix>& in) {
  ModuleOperator ra = right_mult(in[0], ctx.space);
  ModuleOperator rb = right_mult(in[1], ctx.space);
  ModuleOperator comp = compose(ra, rb);
  double res = op_norm(comp.rep() - right_mult(in[1] * in[0], ctx.space).rep());
  if (comp.tag() != ModuleOperator::Tag::RightMultiplier) {
    res = std::max(res, 1.0);
  }
  return res;
}

double p_rmult_exp_isometry(EvalContext& ctx, const std::vector<Matrix>& in) {
  const Matrix& x = in[0];
  const Matrix& w = in[1];
  const double t = in[2](0, 0).real();
  Matrix h = inner(x, x);
  ModuleOperator r = right_mult(h, ctx.space);
  Matrix op_route = unitary_exp(r.rep(), t, ctx.tol);
  Matrix alg_route = right_mult(unitary_exp(h, t, ctx.tol), ctx.space).rep();
  double res = op_norm(op_route - alg_route);
  const double nw = module_norm(w);
  if (nw > 0.0) {
    Matrix moved = unvectorize(op_route * vectorize(w), ctx.space);
    res = std::max(res, std::abs(module_norm(moved) - nw) / (1.0 + nw));
  }
  return res;
}

double p_positivity_cross_check(EvalContext& ctx,
                                const std::vector<Matrix>& in) {
  Matrix h = hermitian_part(in[0]);
  const double shift = op_norm(h) + 1.0;
  const Eigen::Index m = ctx.space.rows;
  struct Variant {
    Matrix factor;
    bool expect_positive;
    bool verdict_known;
  };
  std::vector<Variant> variants;
  variants.push_back({h, false, false});  // indefinite in general: only agreement matters
  variants.push_back({h + shift * Matrix::Identity(m, m), true, true});
  variants.push_back({h - shift * Matrix::Identity(m, m), false, true});

  for (const Variant& v : variants) {
    ModuleOperator f = ModuleOperator::left_multiplier(ctx.space, v.factor);
    bool verdict;
    try {
      verdict = is_positive_op(f, ctx.tol, *ctx.rng);
    } catch (const InternalInconsistency&) {
      return 1.0;
    }
    if (v.verdict_known && verdict != v.expect_positive) return 1.0;
  }
  return 0.0;
}

double p_cauchy_schwarz(EvalContext&, const std::vector<Matrix>& in) {
  return std::max(0.0, -cauchy_schwarz_residual(in[0], in[1]));
}

// --- axioms suite -------------------------------------------------

double p_triple_outer_symmetry(EvalContext& ctx, const std::vector<Matrix>& in) {
  return op_norm(eval_triple(ctx.fault, in[0], in[1], in[2]) -
                 eval_triple(ctx.fault, in[2], in[1], in[0]));
}

double p_triple_middle_conjlinear(EvalContext& ctx,
                                  const std::vector<Matrix>& in) {
  const Matrix& x = in[0];
  const Matrix& y = in[1];
  const Matrix& w = in[2];
  const Matrix& z = in[3];
  const Complex alpha = in[4](0, 0);
  const Complex beta = in[5](0, 0);
  Matrix lhs = eval_triple(ctx.fault, x, alpha * y + beta * w, z);
  Matrix rhs = std::conj(alpha) * eval_triple(ctx.fault, x, y, z) +
               std::conj(beta) * eval_triple(ctx.fault, x, w, z);
  return op_norm(lhs - rhs);
}

double p_jordan_identity(EvalContext& ctx, const std::vector<Matrix>& in) {
  const double scale = 1.0 + op_norm(in[0]) * op_norm(in[1]) * op_norm(in[2]) *
                                 op_norm(in[3]);
  return eval_jordan(ctx.fault, in[0], in[1], in[2], in[3]) / (scale * scale);
}

double p_box_decomposition(EvalContext& ctx, const std::vector<Matrix>& in) {
  const Matrix& x = in[0];
  ModuleOperator bx = eval_box(ctx.fault, x, x);
  Matrix split = 0.5 * (theta(x, x).rep() +
                        right_mult(inner(x, x), ctx.space).rep());
  return op_norm(bx.rep() - split);
}

double p_box_spectrum_nonneg(EvalContext& ctx, const std::vector<Matrix>& in) {
  const Matrix& x = in[0];
  double worst = std::min({min_eig(theta(x, x).rep()),
                           min_eig(right_mult(inner(x, x), ctx.space).rep()),
                           min_eig(eval_box(ctx.fault, x, x).rep())});
  return std::max(0.0, -worst);
}

double p_box_exp_isometry(EvalContext& ctx, const std::vector<Matrix>& in) {
  const Matrix& x = in[0];
  Matrix rep = hermitian_part(eval_box(ctx.fault, x, x).rep());
  double defect = 0.0;
  for (double t : {0.5, -0.5, 1.0, -1.0, 2.0, -2.0}) {
    Matrix u = unitary_exp(rep, t, ctx.tol);
    for (Eigen::Index k = 0; k < ctx.space.dim(); ++k) {
      Matrix e = unvectorize(Eigen::VectorXcd::Unit(ctx.space.dim(), k),
                             ctx.space);
      defect = std::max(defect,
                        std::abs(module_norm(unvectorize(u * vectorize(e),
                                                         ctx.space)) -
                                 1.0));
    }
    for (int s = 0; s < 8; ++s) {
      Matrix z = ctx.rng->gaussian_matrix(ctx.space.rows, ctx.space.cols);
      const double nz = module_norm(z);
      if (nz == 0.0) continue;
      const double nu = module_norm(unvectorize(u * vectorize(z), ctx.space));
      defect = std::max(defect, std::abs(nu / nz - 1.0));
    }
  }
  return defect;
}

double p_cube_identity(EvalContext& ctx, const std::vector<Matrix>& in) {
  const Matrix& x = in[0];
  const double cube = std::pow(module_norm(x), 3);
  return std::abs(module_norm(eval_triple(ctx.fault, x, x, x)) - cube) /
         (1.0 + cube);
}

double p_box_closed_form(EvalContext& ctx, const std::vector<Matrix>& in) {
  return op_norm(eval_box(ctx.fault, in[0], in[1]).rep() -
                 box_rep_closed_form(in[0], in[1]));
}

double p_triple_cube_form(EvalContext& ctx, const std::vector<Matrix>& in) {
  const Matrix& x = in[0];
  return op_norm(eval_triple(ctx.fault, x, x, x) -
                 module_action(x, inner(x, x)));
}

double p_quadratic_square(EvalContext& ctx, const std::vector<Matrix>& in) {
  const Matrix& c = in[0];
  const Matrix& x = in[1];
  Matrix twice = eval_quadratic(ctx.fault, c, eval_quadratic(ctx.fault, c, x));
  Matrix closed = theta(c, c).apply(module_action(x, inner(c, c)));
  return op_norm(twice - closed);
}

// --- ball suite ---------------------------------------------------

double p_bergmann_agreement(EvalContext& ctx, const std::vector<Matrix>& in) {
  const Matrix& c = in[0];
  const double nc2 = module_norm(c) * module_norm(c);
  const double scale = (1.0 + nc2) * (1.0 + nc2);
  return op_norm(eval_bergmann(ctx.fault, c).rep() -
                 bergmann_factored(c).rep()) /
         scale;
}

double p_bergmann_sqrt_square(EvalContext& ctx, const std::vector<Matrix>& in) {
  const Matrix& c = in[0];
  ModuleOperator half = eval_bergmann_sqrt(ctx.fault, c, ctx.tol);
  return op_norm(compose(half, half).rep() - bergmann(c).rep());
}

double p_transvect_zero(EvalContext& ctx, const std::vector<Matrix>& in) {
  BallPoint c = BallPoint::make(in[0], ctx.tol);
  BallPoint zero = BallPoint::make(
      Matrix::Zero(ctx.space.rows, ctx.space.cols), ctx.tol);
  Transvection g = Transvection::make(c, ctx.tol);
  return module_norm(transvect(g, zero, ctx.tol).element() - in[0]);
}

double p_ball_preservation(EvalContext& ctx, const std::vector<Matrix>& in) {
  BallPoint c = BallPoint::make(in[0], ctx.tol);
  BallPoint x = BallPoint::make(in[1], ctx.tol);
  try {
    return transvect(Transvection::make(c, ctx.tol), x, ctx.tol).norm();
  } catch (const InternalInconsistency&) {
    return 2.0;  // the map left the ball
  }
}

double p_transvect_inverse(EvalContext& ctx, const std::vector<Matrix>& in) {
  BallPoint c = BallPoint::make(in[0], ctx.tol);
  BallPoint x = BallPoint::make(in[1], ctx.tol);
  return transvect_inverse_check(c, x, ctx.tol);
}

double p_mobius_denominator_ok(EvalContext& ctx, const std::vector<Matrix>& in) {
  BallPoint c = BallPoint::make(in[0], ctx.tol);
  BallPoint x = BallPoint::make(in[1], ctx.tol);
  try {
    (void)mobius_denominator(c, x, ctx.tol);
  } catch (const Singular&) {
    return 1.0;
  }
  return 0.0;
}

double p_scalar_mobius(EvalContext& ctx, const std::vector<Matrix>&) {
  // 20 x 20 spiral over the disc of radius 0.9; the matrix formula must
  // collapse to the classical disc automorphism (x + c) / (1 + conj(c) x).
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double rc = 0.9 * i / 19.0;
    const Complex cv = std::polar(rc, 2.0 * M_PI * 0.37 * i);
    Matrix cm(1, 1);
    cm(0, 0) = cv;
    BallPoint c = BallPoint::make(cm, ctx.tol);
    Transvection g = Transvection::make(c, ctx.tol);
    for (int j = 0; j < 20; ++j) {
      const double rx = 0.9 * j / 19.0;
      const Complex xv = std::polar(rx, 2.0 * M_PI * (0.61 * j + 0.11));
      Matrix xm(1, 1);
      xm(0, 0) = xv;
      BallPoint x = BallPoint::make(xm, ctx.tol);
      const Complex got = transvect(g, x, ctx.tol).element()(0, 0);
      const Complex expected = (xv + cv) / (1.0 + std::conj(cv) * xv);
      worst = std::max(worst, std::abs(got - expected));
    }
  }
  return worst;
}

// --- extreme suite ------------------------------------------------

double p_tripotent_generator(EvalContext& ctx, const std::vector<Matrix>& in) {
  return is_tripotent(in[0], ctx.tol) ? 0.0 : 1.0;
}

double p_extreme_implies_tripotent(EvalContext& ctx,
                                   const std::vector<Matrix>& in) {
  ExtremeClassification cls = classify(in[0], ctx.tol);
  return (cls.is_extreme && !cls.is_tripotent) ? 1.0 : 0.0;
}

double p_family_norm_extreme(EvalContext& ctx, const std::vector<Matrix>& in) {
  ExtremeClassification cls = classify(in[0], ctx.tol);
  double res = cls.bergmann_norm;
  if (!cls.family_full_norm || !cls.is_extreme) res = std::max(res, 1.0);
  return res;
}

double p_family_range_extreme(EvalContext& ctx, const std::vector<Matrix>& in) {
  ExtremeClassification cls = classify(in[0], ctx.tol);
  double res = cls.bergmann_norm;
  if (!cls.family_full_range || !cls.is_extreme) res = std::max(res, 1.0);
  return res;
}

double p_unitary_invariance(EvalContext& ctx, const std::vector<Matrix>& in) {
  const Matrix& c = in[0];
  const Matrix& u = in[1];
  const Matrix& v = in[2];
  bool before = classify(c, ctx.tol).is_extreme;
  bool after = classify(u * c * v, ctx.tol).is_extreme;
  return before == after ? 0.0 : 1.0;
}

double p_search_outside_families(EvalContext& ctx, const std::vector<Matrix>&) {
  std::vector<Matrix> findings = search_outside_families(
      ctx.space, static_cast<int>(ctx.trials), ctx.seed, ctx.tol);
  if (!findings.empty() && !ctx.fixtures_dir.empty()) {
    std::filesystem::create_directories(ctx.fixtures_dir);
    for (std::size_t i = 0; i < findings.size(); ++i) {
      ExtremeClassification cls = classify(findings[i], ctx.tol);
      std::ostringstream name;
      name << "extreme-outside-families-" << ctx.space.rows << "x"
           << ctx.space.cols << "-" << i << ".fixture";
      write_matrix_file(
          ctx.fixtures_dir / name.str(), findings[i],
          {"extreme point outside both families",
           "bergmann_norm: " + std::to_string(cls.bergmann_norm),
           "is_tripotent: " + std::string(cls.is_tripotent ? "yes" : "no")});
    }
  }
  return static_cast<double>(findings.size());
}

// --- registry -----------------------------------------------------

bool dims_scalar(ModuleSpace s) { return s.rows == 1 && s.cols == 1; }
bool dims_tall(ModuleSpace s) { return s.rows >= s.cols; }
bool dims_wide(ModuleSpace s) { return s.rows <= s.cols; }

const std::vector<Property>& registry() {
  static const std::vector<Property> props = {
      // module suite
      {"cstar_identity", "||a* a|| = ||a||^2", Suite::Module, "A", Th::Abs, 0,
       p_cstar_identity, nullptr, false},
      {"sqrt_reconstruct", "sqrt(p)^2 = p for PSD p = a* a", Suite::Module,
       "A", Th::Composed, 0, p_sqrt_reconstruct, nullptr, false},
      {"sqrt_scaling", "sqrt(s^2 p) = s sqrt(p) for s > 0", Suite::Module,
       "Ar", Th::Composed, 0, p_sqrt_scaling, nullptr, false},
      {"unitary_exp_inverse", "exp(ith) exp(-ith) = 1", Suite::Module, "Ar",
       Th::Composed, 0, p_unitary_exp_inverse, nullptr, false},
      {"spectrum_trace", "sum of eigenvalues = trace", Suite::Module, "A",
       Th::Composed, 0, p_spectrum_trace, nullptr, false},
      {"inner_linear", "<x, a y + b z> = a<x,y> + b<x,z>", Suite::Module,
       "MMMss", Th::Abs, 0, p_inner_linear, nullptr, false},
      {"inner_conjugate_symmetry", "<y,x> = <x,y>*", Suite::Module, "MM",
       Th::Abs, 0, p_inner_conjugate_symmetry, nullptr, false},
      {"inner_positive", "<x,x> >= 0, and <x,x> = 0 only at x = 0",
       Suite::Module, "M", Th::Abs, 0, p_inner_positive, nullptr, false},
      {"inner_norm_bound", "||<x,y>|| <= ||x|| ||y||", Suite::Module, "MM",
       Th::Abs, 0, p_inner_norm_bound, nullptr, false},
      {"inner_loewner_right", "|<x,y>| <= ||x|| |y| (Loewner)", Suite::Module,
       "MM", Th::Abs, 0, p_inner_loewner_right, nullptr, false},
      {"inner_loewner_left", "|<y,x>| <= |x| ||y|| (Loewner)", Suite::Module,
       "MM", Th::Abs, 0, p_inner_loewner_left, nullptr, false},
      {"inner_action_compat", "<x, y.a> = <x,y> a", Suite::Module, "MMA",
       Th::Abs, 0, p_inner_action_compat, nullptr, false},
      {"action_assoc", "(x.a).b = x.(ab)", Suite::Module, "MAA", Th::Abs, 0,
       p_action_assoc, nullptr, false},
      {"action_scalar", "l(x.a) = (lx).a = x.(la)", Suite::Module, "MAs",
       Th::Abs, 0, p_action_scalar, nullptr, false},
      {"action_norm_bound", "||x.a|| <= ||x|| ||a||", Suite::Module, "MA",
       Th::Abs, 0, p_action_norm_bound, nullptr, false},
      {"theta_adjoint", "theta(x,y)* = theta(y,x), (f*)* = f", Suite::Module,
       "MM", Th::Abs, 0, p_theta_adjoint, nullptr, false},
      {"rmult_compose", "R_a R_b = R_{ba}, tag preserved", Suite::Module,
       "AA", Th::Abs, 0, p_rmult_compose, nullptr, false},
      {"rmult_exp_isometry",
       "exp(it R_{|x|^2}) w = w.exp(it|x|^2), an isometry", Suite::Module,
       "MMr", Th::Composed, 0, p_rmult_exp_isometry, nullptr, false},
      {"positivity_cross_check",
       "spectral and sampled operator positivity agree", Suite::Module, "L",
       Th::Half, 0, p_positivity_cross_check, nullptr, false},
      {"cauchy_schwarz", "<y,x><x,y> <= ||<x,x>|| <y,y>", Suite::Module, "MM",
       Th::Abs, 0, p_cauchy_schwarz, nullptr, false},

      // axioms suite
      {"triple_outer_symmetry", "{x,y,z} = {z,y,x}", Suite::Axioms, "MMM",
       Th::Abs, 0, p_triple_outer_symmetry, nullptr, false},
      {"triple_middle_conjlinear",
       "{x, a y + b w, z} = conj(a){x,y,z} + conj(b){x,w,z}", Suite::Axioms,
       "MMMMss", Th::Abs, 0, p_triple_middle_conjlinear, nullptr, false},
      {"jordan_identity",
       "[a box b, c box d] = {a,b,c} box d - c box {d,a,b}", Suite::Axioms,
       "MMMM", Th::Composed, 0, p_jordan_identity, nullptr, false},
      {"box_decomposition", "x box x = (theta_{x,x} + R_{|x|^2})/2",
       Suite::Axioms, "M", Th::Abs, 0, p_box_decomposition, nullptr, false},
      {"box_spectrum_nonneg",
       "theta_{x,x}, R_{|x|^2} and x box x have spectrum >= 0", Suite::Axioms,
       "M", Th::Abs, 0, p_box_spectrum_nonneg, nullptr, false},
      {"box_exp_isometry", "exp(it(x box x)) preserves the module norm",
       Suite::Axioms, "M", Th::Composed, 0, p_box_exp_isometry, nullptr,
       false},
      {"cube_identity", "||{x,x,x}|| = ||x||^3", Suite::Axioms, "M", Th::Abs,
       0, p_cube_identity, nullptr, false},
      {"box_closed_form",
       "box(x,y) = (I (x) xy* + (y*x)^T (x) I)/2 on representations",
       Suite::Axioms, "MM", Th::Abs, 0, p_box_closed_form, nullptr, false},
      {"triple_cube_form", "{x,x,x} = x.<x,x>", Suite::Axioms, "M", Th::Abs,
       0, p_triple_cube_form, nullptr, false},
      {"quadratic_square", "Q_c^2(x) = (c (x) c*)(x.|c|^2)", Suite::Axioms,
       "MM", Th::Abs, 0, p_quadratic_square, nullptr, false},

      // ball suite
      {"bergmann_agreement", "expanded B(c,c) = (1 - c(x)c*)(x.(1-|c|^2))",
       Suite::Ball, "B", Th::Abs, 0, p_bergmann_agreement, nullptr, false},
      {"bergmann_sqrt_square", "B_c^2 = B(c,c)", Suite::Ball, "B",
       Th::Composed, 0, p_bergmann_sqrt_square, nullptr, false},
      {"transvect_zero", "g_c(0) = c", Suite::Ball, "B", Th::Abs, 0,
       p_transvect_zero, nullptr, false},
      {"ball_preservation", "||g_c(x)|| < 1", Suite::Ball, "BB", Th::One, 0,
       p_ball_preservation, nullptr, false},
      {"transvect_inverse", "g_{-c}(g_c(x)) = x", Suite::Ball, "BB",
       Th::Composed, 0, p_transvect_inverse, nullptr, false},
      {"mobius_denominator_ok", "1 + <c,x> invertible inside the ball",
       Suite::Ball, "BB", Th::Half, 0, p_mobius_denominator_ok, nullptr,
       false},
      {"scalar_mobius", "g_c(x) = (x + c)/(1 + conj(c) x) at m = n = 1",
       Suite::Ball, "", Th::Fixed, 1e-12, p_scalar_mobius, dims_scalar, true},

      // extreme suite
      {"tripotent_generator", "random partial isometries satisfy c = c.<c,c>",
       Suite::Extreme, "T", Th::Half, 0, p_tripotent_generator, nullptr,
       false},
      {"extreme_implies_tripotent", "extreme points are tripotents",
       Suite::Extreme, "T", Th::Half, 0, p_extreme_implies_tripotent, nullptr,
       false},
      {"family_norm_extreme", "c* c = 1 forces B(c,c) = 0", Suite::Extreme,
       "Q", Th::Abs, 0, p_family_norm_extreme, dims_tall, false},
      {"family_range_extreme", "c c* = 1 forces B(c,c) = 0", Suite::Extreme,
       "R", Th::Abs, 0, p_family_range_extreme, dims_wide, false},
      {"unitary_invariance", "extremality is invariant under c -> u c v",
       Suite::Extreme, "Tuv", Th::Half, 0, p_unitary_invariance, nullptr,
       false},
      {"search_outside_families",
       "no extreme point found outside the two families", Suite::Extreme, "",
       Th::Half, 0, p_search_outside_families, nullptr, true},
  };
  return props;
}

const Property* find_property(std::string_view name) {
  for (const Property& p : registry()) {
    if (name == p.name) return &p;
  }
  return nullptr;
}

std::vector<Matrix> draw_inputs(const Property& p, ModuleSpace space, Rng& rng,
                                const ToleranceConfig& tol) {
  std::vector<Matrix> inputs;
  for (const char* k = p.inputs; *k; ++k) {
    // family draws need their own shapes
    if (*k == 'Q') {
      inputs.push_back(orthonormal_columns(space.rows, space.cols, rng));
    } else if (*k == 'R') {
      inputs.push_back(
          orthonormal_columns(space.cols, space.rows, rng).adjoint().eval());
    } else {
      inputs.push_back(draw_input(*k, space, rng, tol));
    }
  }
  return inputs;
}

std::string dim_string(ModuleSpace s) {
  return std::to_string(s.rows) + "x" + std::to_string(s.cols);
}

}  // namespace

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Module:
      return "module";
    case Suite::Axioms:
      return "axioms";
    case Suite::Ball:
      return "ball";
    case Suite::Extreme:
      return "extreme";
  }
  return "?";
}

std::optional<Suite> suite_from_string(std::string_view s) {
  if (s == "module") return Suite::Module;
  if (s == "axioms") return Suite::Axioms;
  if (s == "ball") return Suite::Ball;
  if (s == "extreme") return Suite::Extreme;
  return std::nullopt;
}

std::string to_string(Fault f) {
  switch (f) {
    case Fault::None:
      return "none";
    case Fault::TripleSignFlip:
      return "triple-sign-flip";
    case Fault::BergmannSqrtSkip:
      return "bergmann-sqrt-skip";
  }
  return "?";
}

std::optional<Fault> fault_from_string(std::string_view s) {
  if (s == "none") return Fault::None;
  if (s == "triple-sign-flip") return Fault::TripleSignFlip;
  if (s == "bergmann-sqrt-skip") return Fault::BergmannSqrtSkip;
  return std::nullopt;
}

std::vector<ModuleSpace> SuiteConfig::default_dims() {
  return {{1, 1}, {2, 2}, {3, 2}, {2, 3}, {4, 1}};
}

void SuiteConfig::validate() const {
  if (dims.empty()) throw std::invalid_argument("config: dims must be nonempty");
  for (ModuleSpace d : dims) {
    if (d.rows < 1 || d.cols < 1) {
      throw std::invalid_argument("config: dimensions must be >= 1");
    }
  }
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (suites.empty()) {
    throw std::invalid_argument("config: at least one suite must be selected");
  }
  tolerances.validate();
}

BallPoint generate_ball_point(ModuleSpace space, Rng& rng,
                              const ToleranceConfig& tol) {
  Matrix g = rng.gaussian_matrix(space.rows, space.cols);
  const double norm = op_norm(g);
  const double target = 0.95 * rng.uniform();
  if (norm == 0.0) {
    return BallPoint::make(Matrix::Zero(space.rows, space.cols), tol);
  }
  return BallPoint::make(g * (target / norm), tol);
}

SuiteReport run_suites(const SuiteConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  SuiteReport report;
  for (const Property& prop : registry()) {
    if (!config.suites.contains(prop.suite)) continue;
    for (ModuleSpace space : config.dims) {
      if (prop.applicable && !prop.applicable(space)) continue;

      PropertyRecord rec;
      rec.suite = to_string(prop.suite);
      rec.name = prop.name;
      rec.law = prop.law;
      rec.dim = dim_string(space);
      rec.threshold = threshold_of(prop, config.tolerances);

      const long trials = prop.whole_dim ? 1 : config.trials;
      for (long trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::derive(config.seed, prop.name,
                              static_cast<std::uint64_t>(space.rows),
                              static_cast<std::uint64_t>(space.cols),
                              static_cast<std::uint64_t>(trial));
        std::vector<Matrix> inputs =
            prop.whole_dim
                ? std::vector<Matrix>{}
                : draw_inputs(prop, space, rng, config.tolerances);
        EvalContext ctx{space,        config.tolerances, config.fault, &rng,
                        config.trials, config.seed,      config.fixtures_dir};
        double residual;
        try {
          residual = prop.eval(ctx, inputs);
        } catch (const Error&) {
          residual = kErrorResidual;
        }
        if (!std::isfinite(residual)) residual = kErrorResidual;

        ++rec.trials_run;
        rec.worst_residual = std::max(rec.worst_residual, residual);
        if (residual > rec.threshold) {
          ++rec.failures;
          if (!rec.witness && !config.fixtures_dir.empty()) {
            std::filesystem::create_directories(config.fixtures_dir);
            Witness w;
            w.meta.emplace_back("property", prop.name);
            w.meta.emplace_back("suite", to_string(prop.suite));
            w.meta.emplace_back("dim", rec.dim);
            w.meta.emplace_back("seed", std::to_string(config.seed));
            w.meta.emplace_back("trial", std::to_string(trial));
            w.meta.emplace_back("trials", std::to_string(config.trials));
            w.meta.emplace_back("fault", to_string(config.fault));
            w.meta.emplace_back("residual", std::to_string(residual));
            w.meta.emplace_back("threshold", std::to_string(rec.threshold));
            w.inputs = inputs;
            std::ostringstream name;
            name << prop.name << "-" << rec.dim << "-trial" << trial
                 << ".fixture";
            std::filesystem::path path = config.fixtures_dir / name.str();
            write_witness_file(path, w);
            rec.witness = path.string();
          }
        }
      }
      report.properties.push_back(std::move(rec));
    }
  }

  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

ReplayResult replay_witness(const std::filesystem::path& file,
                            const ToleranceConfig& tol, Fault fault) {
  Witness w = read_witness_file(file);
  const std::string* pname = w.find("property");
  if (!pname) {
    throw ParseError("replay: file has no '# property:' header: " +
                     file.string());
  }
  const Property* prop = find_property(*pname);
  if (!prop) {
    throw ParseError("replay: unknown property '" + *pname + "'");
  }

  ModuleSpace space;
  if (const std::string* dim = w.find("dim")) {
    std::istringstream ss(*dim);
    char sep = 0;
    if (!(ss >> space.rows >> sep >> space.cols) || sep != 'x' ||
        space.rows < 1 || space.cols < 1) {
      throw ParseError("replay: bad dim '" + *dim + "'");
    }
  } else if (!w.inputs.empty()) {
    space = ModuleSpace{w.inputs[0].rows(), w.inputs[0].cols()};
  } else {
    throw ParseError("replay: no dim header and no inputs");
  }

  if (!prop->whole_dim && w.inputs.size() != std::strlen(prop->inputs)) {
    throw ParseError("replay: property '" + *pname + "' expects " +
                     std::to_string(std::strlen(prop->inputs)) +
                     " matrices, file has " + std::to_string(w.inputs.size()));
  }

  auto meta_u64 = [&](const char* key, std::uint64_t fallback) {
    const std::string* v = w.find(key);
    return v ? std::stoull(*v) : fallback;
  };
  const std::uint64_t seed = meta_u64("seed", 0);
  const std::uint64_t trial = meta_u64("trial", 0);
  const long trials = static_cast<long>(meta_u64("trials", 100));

  Rng rng = Rng::derive(seed, prop->name,
                        static_cast<std::uint64_t>(space.rows),
                        static_cast<std::uint64_t>(space.cols), trial);
  if (!prop->whole_dim) {
    // Advance the stream past the input draws so sampled sub-checks see
    // the same state as the original run; the file matrices stay
    // authoritative as inputs.
    (void)draw_inputs(*prop, space, rng, tol);
  }

  EvalContext ctx{space, tol, fault, &rng, trials, seed, {}};
  double residual;
  try {
    residual = prop->eval(ctx, w.inputs);
  } catch (const Error&) {
    residual = kErrorResidual;
  }

  ReplayResult result;
  result.property = prop->name;
  result.dim = dim_string(space);
  result.residual = residual;
  result.threshold = threshold_of(*prop, tol);
  result.passed = residual <= result.threshold;
  return result;
}

void print_text(std::ostream& out, const SuiteConfig& config,
                const SuiteReport& report) {
  out << "seed " << config.seed << ", trials " << config.trials
      << ", abs_tol " << config.tolerances.abs_tol << ", composed_tol "
      << config.tolerances.composed_tol;
  if (config.fault != Fault::None) {
    out << ", injected fault " << to_string(config.fault);
  }
  out << "\n\n";

  for (const PropertyRecord& p : report.properties) {
    out << (p.passed() ? "[PASS] " : "[FAIL] ") << p.suite << "/" << p.name
        << "  " << p.dim << "  trials=" << p.trials_run
        << " failures=" << p.failures << " worst=" << p.worst_residual
        << " threshold=" << p.threshold;
    if (p.witness) out << "  witness=" << *p.witness;
    out << "\n    " << p.law << "\n";
  }

  out << "\n"
      << (report.pass() ? "all properties passed" : "PROPERTY FAILURES PRESENT")
      << " (" << report.properties.size() << " records, "
      << report.total_failures() << " failing trials, "
      << report.wall_time_seconds << " s)\n";
}

std::string report_json(const SuiteConfig& config, const SuiteReport& report) {
  nlohmann::json j;
  nlohmann::json dims = nlohmann::json::array();
  for (ModuleSpace d : config.dims) dims.push_back(dim_string(d));
  nlohmann::json suites = nlohmann::json::array();
  for (Suite s : config.suites) suites.push_back(to_string(s));
  j["config"] = {
      {"dims", dims},
      {"trials", config.trials},
      {"seed", config.seed},
      {"suites", suites},
      {"fault", to_string(config.fault)},
      {"fixtures_dir", config.fixtures_dir.string()},
      {"tolerances",
       {{"abs_tol", config.tolerances.abs_tol},
        {"composed_tol", config.tolerances.composed_tol},
        {"eig_clip", config.tolerances.eig_clip},
        {"sample_count", config.tolerances.sample_count}}},
  };

  nlohmann::json props = nlohmann::json::array();
  for (const PropertyRecord& p : report.properties) {
    nlohmann::json rec = {
        {"suite", p.suite},
        {"name", p.name},
        {"law", p.law},
        {"dim", p.dim},
        {"trials_run", p.trials_run},
        {"failures", p.failures},
        {"worst_residual", p.worst_residual},
        {"threshold", p.threshold},
        {"passed", p.passed()},
    };
    if (p.witness) {
      rec["witness"] = *p.witness;
    } else {
      rec["witness"] = nullptr;
    }
    props.push_back(std::move(rec));
  }
  j["properties"] = std::move(props);
  j["pass"] = report.pass();
  j["wall_time_seconds"] = report.wall_time_seconds;
  return j.dump(2);
}

}  // namespace matriple
