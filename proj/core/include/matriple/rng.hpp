#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

#include <Eigen/Core>

namespace matriple {

/// Deterministic random source: a seeded mt19937_64 with explicit
/// uniform and Box-Muller gaussian mappings, so a fixed seed reproduces
/// the same draws run after run.  Independent streams are derived by
/// hash-mixing a seed with a label and up to three indices.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  static Rng derive(std::uint64_t seed, std::string_view label,
                    std::uint64_t a = 0, std::uint64_t b = 0,
                    std::uint64_t c = 0);

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 significant bits.
  double uniform();
  double uniform(double lo, double hi);

  /// Standard real gaussian.
  double gaussian();

  /// Standard complex gaussian: real and imaginary parts N(0, 1/2).
  std::complex<double> gaussian_complex();

  Eigen::MatrixXcd gaussian_matrix(Eigen::Index rows, Eigen::Index cols);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace matriple
