#pragma once

#include "matriple/triple.hpp"

namespace matriple {

/// A point of the open unit ball of E.  Public construction enforces a
/// strict margin (norm <= 1 - 10*abs_tol) so the denominators 1 + <c,x>
/// downstream stay well conditioned; points produced by the library's own
/// maps only assert strict membership.
class BallPoint {
 public:
  /// Throws OutsideBall when module_norm(x) > 1 - 10*abs_tol.
  static BallPoint make(Matrix x, const ToleranceConfig& tol);

  const Matrix& element() const { return element_; }
  double norm() const { return norm_; }

  BallPoint negated() const;

 private:
  BallPoint(Matrix x, double norm);

  /// Internal route for images of ball points under the maps below;
  /// throws InternalInconsistency when the norm is not < 1.
  static BallPoint trusted(Matrix x);

  friend BallPoint transvect(const class Transvection&, const BallPoint&,
                             const ToleranceConfig&);
  friend BallPoint apply_automorphism(const ModuleOperator&, const BallPoint&,
                                      const BallPoint&, const ToleranceConfig&,
                                      Rng&);

  Matrix element_;
  double norm_ = 0.0;
};

/// Bergmann operator B(c,c): x -> x - 2(c box c)(x) + Q_c^2(x), assembled
/// from the expanded form (box built from triple products, Q_c applied
/// twice).
ModuleOperator bergmann(const Matrix& c);

/// Factored closed form (1 - c (x) c*)(x.(1 - |c|^2)) as a Kronecker
/// product; the independent route B(c,c) is checked against.
ModuleOperator bergmann_factored(const Matrix& c);

/// B_c: x -> (1 - cc*)^{1/2} x (1 - |c|^2)^{1/2}; satisfies B_c^2 = B(c,c).
/// Throws NotPositive when ||c|| > 1.
ModuleOperator bergmann_sqrt(const Matrix& c, const ToleranceConfig& tol);

/// (1 + <c,x>)^{-1} with its condition number.  Invertibility is
/// guaranteed strictly inside the ball; Singular here signals a broken
/// precondition, never an expected path.
Inversion mobius_denominator(const BallPoint& c, const BallPoint& x,
                             const ToleranceConfig& tol);

/// The transvection g_c with its square-root factors precomputed.
class Transvection {
 public:
  static Transvection make(const BallPoint& center, const ToleranceConfig& tol);

  const BallPoint& center() const { return center_; }
  /// (1 - c c*)^{1/2}, m x m.
  const Matrix& sqrt_left() const { return sqrt_left_; }
  /// (1 - |c|^2)^{1/2}, n x n.
  const Matrix& sqrt_right() const { return sqrt_right_; }

 private:
  Transvection(BallPoint center, Matrix sqrt_left, Matrix sqrt_right);

  BallPoint center_;
  Matrix sqrt_left_;
  Matrix sqrt_right_;
};

/// g_c(x) = c + (1-cc*)^{1/2} [ x.(1+<c,x>)^{-1} (1-|c|^2)^{1/2} ].
BallPoint transvect(const Transvection& g, const BallPoint& x,
                    const ToleranceConfig& tol);

/// || g_{-c}(g_c(x)) - x ||, the numerical probe of g_c^{-1} = g_{-c}.
double transvect_inverse_check(const BallPoint& c, const BallPoint& x,
                               const ToleranceConfig& tol);

/// h = L o g_c for a surjective linear isometry L of E (checked on the
/// standard basis plus sampled draws; throws NotIsometry).
BallPoint apply_automorphism(const ModuleOperator& L, const BallPoint& c,
                             const BallPoint& x, const ToleranceConfig& tol,
                             Rng& rng);

}  // namespace matriple
