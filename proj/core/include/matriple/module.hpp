#pragma once

#include <functional>

#include "matriple/algebra.hpp"
#include "matriple/rng.hpp"

namespace matriple {

/// The pair (E, A) = (M_{m x n}, M_n): module elements are m x n complex
/// matrices, algebra elements n x n, with <x,y> = x* y and x.a = x a.
struct ModuleSpace {
  Eigen::Index rows = 1;
  Eigen::Index cols = 1;

  Eigen::Index dim() const { return rows * cols; }
  bool operator==(const ModuleSpace&) const = default;
};

/// Column-major vectorisation of an element of E and its inverse.
Eigen::VectorXcd vectorize(const Matrix& x);
Matrix unvectorize(const Eigen::VectorXcd& v, ModuleSpace space);

/// A complex-linear operator on E, stored as its (mn) x (mn) matrix acting
/// on the column-major vectorisation.  Left and right multiplications keep
/// their factor as a tag so the closed forms stay available; composing two
/// operators of the same tagged kind stays tagged.
class ModuleOperator {
 public:
  enum class Tag { Generic, LeftMultiplier, RightMultiplier };

  static ModuleOperator generic(ModuleSpace space, Matrix rep);
  /// z -> factor * z with an m x m factor; rep is I_n (x) factor.
  static ModuleOperator left_multiplier(ModuleSpace space, Matrix factor);
  /// z -> z * factor with an n x n factor; rep is factor^T (x) I_m.
  static ModuleOperator right_multiplier(ModuleSpace space, Matrix factor);
  static ModuleOperator identity(ModuleSpace space);

  Matrix apply(const Matrix& x) const;

  const Matrix& rep() const { return rep_; }
  ModuleSpace space() const { return space_; }
  Tag tag() const { return tag_; }
  /// Tag payload; throws Error for Generic operators.
  const Matrix& factor() const;

  /// Largest singular value of rep(); the operator norm induced by the
  /// Frobenius norm on E.
  double norm() const;

 private:
  ModuleOperator(ModuleSpace space, Matrix rep, Tag tag, Matrix factor);

  ModuleSpace space_;
  Matrix rep_;
  Tag tag_;
  Matrix factor_;
};

/// x -> f(g(x)).  LeftMultiplier composes to LeftMultiplier(fg);
/// RightMultiplier(a) after RightMultiplier(b) is RightMultiplier(b a).
ModuleOperator compose(const ModuleOperator& f, const ModuleOperator& g);

/// Assembles the operator matrix of a linear action by applying it to the
/// standard basis of E, column by column.
ModuleOperator operator_from_action(
    ModuleSpace space, const std::function<Matrix(const Matrix&)>& action);

/// <x, y> = x* y; conjugate-linear in x, linear in y.
Matrix inner(const Matrix& x, const Matrix& y);

/// x.a = x a.
Matrix module_action(const Matrix& x, const Matrix& a);

/// ||x|| = ||<x,x>||^{1/2}, the largest singular value of x.
double module_norm(const Matrix& x);

/// |x| = <x,x>^{1/2}, a PSD element of A.
Matrix a_valued_norm(const Matrix& x, const ToleranceConfig& tol);

/// theta_{x,y}: z -> x.<y,z>, tagged LeftMultiplier(x y*).
ModuleOperator theta(const Matrix& x, const Matrix& y);

/// R_a: z -> z.a, tagged RightMultiplier(a).
ModuleOperator right_mult(const Matrix& a, ModuleSpace space);

struct OperatorAdjoint {
  ModuleOperator op;
  /// Whether the returned adjoint satisfies <f(x),y> = <x,g(y)> for the
  /// A-valued inner product (checked on the standard basis).  False for
  /// maps that are not A-linear, e.g. a generic right multiplication.
  bool a_adjointable;
};

/// Adjoint for the trace pairing on E (rep -> rep*), with tag preserved:
/// LeftMultiplier(M) -> LeftMultiplier(M*), RightMultiplier(a) ->
/// RightMultiplier(a*).
OperatorAdjoint adjoint_op(const ModuleOperator& f, const ToleranceConfig& tol);

/// f(x.a) = f(x).a over all standard-basis pairs plus sampled draws.
bool is_a_linear(const ModuleOperator& f, const ToleranceConfig& tol, Rng& rng);

/// Recovers M with f = (z -> M z); throws NotALinear when f is not a left
/// multiplication within abs_tol.
Matrix left_factor(const ModuleOperator& f, const ToleranceConfig& tol);

/// Positivity of an A-linear operator, decided two independent ways that
/// must agree: (i) spectrum of the recovered left factor, (ii) <x, f(x)> >= 0
/// sampled over the standard basis and sample_count random draws.
/// Disagreement throws InternalInconsistency.
bool is_positive_op(const ModuleOperator& f, const ToleranceConfig& tol,
                    Rng& rng);

/// Smallest eigenvalue of ||<x,x>|| <y,y> - <y,x><x,y>; nonnegative up to
/// rounding.
double cauchy_schwarz_residual(const Matrix& x, const Matrix& y);

}  // namespace matriple
