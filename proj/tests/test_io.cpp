#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "matriple/fixture.hpp"
#include "matriple/rng.hpp"
#include "matriple/suites.hpp"

using namespace matriple;

namespace fs = std::filesystem;

TEST_CASE("matrix text round trip is exact") {
  Rng rng(3);
  for (auto [r, c] : {std::pair<int, int>{1, 1}, {4, 1}, {2, 3}, {3, 3}}) {
    Matrix m = rng.gaussian_matrix(r, c);
    std::stringstream ss;
    write_matrix(ss, m);
    Matrix back = read_matrix(ss);
    REQUIRE(back.rows() == m.rows());
    REQUIRE(back.cols() == m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        CHECK(back(i, j) == m(i, j));  // bitwise, via 17 significant digits
      }
    }
  }
}

TEST_CASE("comments and blank lines are skipped") {
  std::stringstream ss(
      "# a comment\n"
      "\n"
      "2 2\n"
      "# interior comment\n"
      "1,0 2,-1\n"
      "0,0 3,0.5\n");
  Matrix m = read_matrix(ss);
  CHECK(m(0, 1) == Complex(2, -1));
  CHECK(m(1, 1) == Complex(3, 0.5));
}

TEST_CASE("malformed fixtures are rejected") {
  auto fails = [](const std::string& text) {
    std::stringstream ss(text);
    CHECK_THROWS_AS((void)read_matrix(ss), ParseError);
  };
  fails("");                                  // empty
  fails("2\n1,0\n");                          // missing cols
  fails("2 2\n1,0 2,0\n");                    // too few rows
  fails("1 2\n1,0\n");                        // too few entries
  fails("1 1\n1,0 2,0\n");                    // too many entries
  fails("1 1\nfoo\n");                        // not a pair
  fails("1 1\n1;0\n");                        // wrong separator
  fails("1 1\nnan,0\n");                      // non-finite
  fails("0 2\n");                             // degenerate dims
  fails("1 1x\n1,0\n");                       // trailing junk in header
}

TEST_CASE("witness files carry metadata and several matrices") {
  Rng rng(5);
  Witness w;
  w.meta.emplace_back("property", "cube_identity");
  w.meta.emplace_back("dim", "2x2");
  w.meta.emplace_back("trial", "7");
  w.inputs.push_back(rng.gaussian_matrix(2, 2));
  w.inputs.push_back(rng.gaussian_matrix(2, 2));
  w.inputs.push_back(rng.gaussian_matrix(1, 1));

  fs::path file = fs::temp_directory_path() / "matriple_witness_test.fixture";
  write_witness_file(file, w);
  Witness back = read_witness_file(file);
  fs::remove(file);

  REQUIRE(back.find("property"));
  CHECK(*back.find("property") == "cube_identity");
  CHECK(*back.find("dim") == "2x2");
  REQUIRE(back.inputs.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(op_norm(back.inputs[k] - w.inputs[k]) == 0.0);
  }
  // a plain fixture parses as a witness without metadata
  fs::path plain = fs::temp_directory_path() / "matriple_plain_test.fixture";
  write_matrix_file(plain, w.inputs[0]);
  Witness p = read_witness_file(plain);
  fs::remove(plain);
  CHECK(p.find("property") == nullptr);
  REQUIRE(p.inputs.size() == 1);
}

TEST_CASE("rng determinism") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  Rng c(42);
  Rng d(42);
  Matrix mc = c.gaussian_matrix(2, 2);
  Matrix md = d.gaussian_matrix(2, 2);
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      CHECK(mc(i, j) == md(i, j));
    }
  }

  // derived streams differ across labels and indices, agree on equal keys
  CHECK(Rng::derive(1, "x", 0, 0, 0).next_u64() ==
        Rng::derive(1, "x", 0, 0, 0).next_u64());
  CHECK(Rng::derive(1, "x", 0, 0, 0).next_u64() !=
        Rng::derive(1, "y", 0, 0, 0).next_u64());
  CHECK(Rng::derive(1, "x", 0, 0, 1).next_u64() !=
        Rng::derive(1, "x", 0, 0, 2).next_u64());
  CHECK(Rng::derive(1, "x", 0, 0, 0).next_u64() !=
        Rng::derive(2, "x", 0, 0, 0).next_u64());
}

TEST_CASE("uniform and gaussian ranges") {
  Rng rng(7);
  double mean = 0.0;
  double sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double g = rng.gaussian();
    mean += g;
    sq += g * g;
  }
  mean /= n;
  sq /= n;
  CHECK(std::abs(mean) < 0.05);
  CHECK(std::abs(sq - 1.0) < 0.05);
}

TEST_CASE("ball point generator: determinism, cap, uniform norm") {
  const ToleranceConfig tol;
  ModuleSpace sp{2, 2};

  Rng a = Rng::derive(42, "bp", 2, 2, 0);
  Rng b = Rng::derive(42, "bp", 2, 2, 0);
  Matrix first = generate_ball_point(sp, a, tol).element();
  Matrix second = generate_ball_point(sp, b, tol).element();
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      CHECK(first(i, j) == second(i, j));
    }
  }

  // Kolmogorov-Smirnov distance of the norms against U[0, 0.95]
  const int n = 10000;
  std::vector<double> norms;
  norms.reserve(n);
  Rng rng(123);
  for (int i = 0; i < n; ++i) {
    BallPoint p = generate_ball_point(sp, rng, tol);
    CHECK(p.norm() <= 0.95);
    norms.push_back(p.norm());
  }
  std::sort(norms.begin(), norms.end());
  double ks = 0.0;
  for (int i = 0; i < n; ++i) {
    const double model = std::min(1.0, std::max(0.0, norms[i] / 0.95));
    ks = std::max(ks, std::abs(model - static_cast<double>(i + 1) / n));
    ks = std::max(ks, std::abs(model - static_cast<double>(i) / n));
  }
  CHECK(ks < 0.05);
}
