#pragma once

#include <cstdint>
#include <vector>

#include "matriple/ball.hpp"

namespace matriple {

/// c = c.<c,c> up to abs_tol * (1 + ||c||^3); in this model exactly the
/// partial isometries.
bool is_tripotent(const Matrix& c, const ToleranceConfig& tol);

struct ExtremeClassification {
  bool is_extreme = false;
  bool is_tripotent = false;
  bool family_full_norm = false;   // c* c = 1_n
  bool family_full_range = false;  // c c* = 1_m
  double bergmann_norm = 0.0;      // ||B(c,c)|| for diagnostics
};

/// Extreme-point test by the Bergmann-kernel criterion: extreme iff
/// ||B(c,c)|| <= abs_tol.  Requires ||c|| <= 1 + abs_tol (OutsideBall).
ExtremeClassification classify(const Matrix& c, const ToleranceConfig& tol);

/// Random partial isometry: SVD of a gaussian draw with singular values
/// above 0.5 snapped to 1 and the rest to 0.
Matrix random_tripotent(ModuleSpace space, Rng& rng);

/// Draws `trials` random tripotents (per-trial generator state derived
/// from seed and trial index), classifies each, and returns every extreme
/// point that sits in neither family.  Expected empty in this model; a
/// non-empty result is surfaced loudly by the callers.
std::vector<Matrix> search_outside_families(ModuleSpace space, int trials,
                                            std::uint64_t seed,
                                            const ToleranceConfig& tol);

}  // namespace matriple
