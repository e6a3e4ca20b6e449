#pragma once

#include "matriple/module.hpp"

namespace matriple {

/// Bundles the ambient space with the tolerances in force; the context
/// object the verification suites thread through their checks.
struct TripleSystem {
  ModuleSpace space;
  ToleranceConfig tolerances;
};

/// 2{x,y,z} = x.<y,z> + z.<y,x>: symmetric and linear in (x,z),
/// conjugate-linear in y.
Matrix triple_product(const Matrix& x, const Matrix& y, const Matrix& z);

/// box(x,y): z -> {x,y,z}, assembled column by column from the triple
/// product (a Generic operator, deliberately not built from the closed
/// form so the two routes stay independent).
ModuleOperator box(const Matrix& x, const Matrix& y);

/// Closed Kronecker form of box(x,y): (I_n (x) x y* + (y* x)^T (x) I_m)/2.
Matrix box_rep_closed_form(const Matrix& x, const Matrix& y);

/// Operator norm of [a box b, c box d] - ({a,b,c} box d - c box {d,a,b}).
double jordan_residual(const Matrix& a, const Matrix& b, const Matrix& c,
                       const Matrix& d);

/// Structure report for box(x,x): the split into (theta_{x,x} + R_{|x|^2})/2,
/// the spectra of all three operators and the sampled isometry defect of
/// exp(i t box(x,x)) for t in {+-0.5, +-1, +-2}.
struct BoxStructureReport {
  double decomp_residual = 0.0;
  double theta_min_eig = 0.0;
  double rmult_min_eig = 0.0;
  double box_min_eig = 0.0;
  double isometry_defect = 0.0;

  bool passes(const ToleranceConfig& tol) const;
};

BoxStructureReport box_structure_report(const Matrix& x,
                                        const ToleranceConfig& tol, Rng& rng);

/// | ||{x,x,x}|| - ||x||^3 | / (1 + ||x||^3).
double cube_identity_residual(const Matrix& x);

/// Q_c(x) = {c,x,c} = c.<x,c>; conjugate-linear in x.
Matrix quadratic(const Matrix& c, const Matrix& x);

}  // namespace matriple
