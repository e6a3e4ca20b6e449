#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "matriple/extremal.hpp"
#include "matriple/fixture.hpp"

using namespace matriple;

namespace {
const ToleranceConfig tol;

Matrix e11(Eigen::Index m, Eigen::Index n, double v = 1.0) {
  Matrix e = Matrix::Zero(m, n);
  e(0, 0) = v;
  return e;
}
}  // namespace

TEST_CASE("tripotency") {
  CHECK(is_tripotent(Matrix::Zero(2, 2), tol));
  CHECK(is_tripotent(e11(2, 2), tol));
  CHECK_FALSE(is_tripotent(e11(2, 2, 2.0), tol));  // {c,c,c} = 8 e11 != 2 e11
  CHECK(is_tripotent(Matrix::Identity(3, 3), tol));
}

TEST_CASE("classification of pinned points") {
  // unitary: both families, extreme
  ExtremeClassification u = classify(Matrix::Identity(2, 2), tol);
  CHECK(u.is_extreme);
  CHECK(u.is_tripotent);
  CHECK(u.family_full_norm);
  CHECK(u.family_full_range);
  CHECK(u.bergmann_norm <= tol.abs_tol);

  // rank-one tripotent in M_2: B(c,c) acts as the complementary corner
  ExtremeClassification r1 = classify(e11(2, 2), tol);
  CHECK(r1.is_tripotent);
  CHECK_FALSE(r1.is_extreme);
  CHECK(r1.bergmann_norm == doctest::Approx(1.0));
  CHECK_FALSE(r1.family_full_norm);
  CHECK_FALSE(r1.family_full_range);

  // 2x3 co-isometry: c c* = 1_2, c* c a rank-2 projection in M_3
  Matrix c = Matrix::Zero(2, 3);
  c(0, 0) = 1.0;
  c(1, 1) = 1.0;
  ExtremeClassification co = classify(c, tol);
  CHECK(co.family_full_range);
  CHECK_FALSE(co.family_full_norm);
  CHECK(co.is_extreme);
  CHECK(co.is_tripotent);

  CHECK_THROWS_AS(classify(e11(2, 2, 2.0), tol), OutsideBall);
}

TEST_CASE("random tripotents are partial isometries") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    for (ModuleSpace sp : {ModuleSpace{1, 1}, ModuleSpace{2, 2},
                           ModuleSpace{2, 3}, ModuleSpace{4, 1}}) {
      Rng rng = Rng::derive(seed, "test.tripotent", sp.rows, sp.cols);
      Matrix c = random_tripotent(sp, rng);
      CHECK(is_tripotent(c, tol));
      CHECK(module_norm(c) <= 1.0 + tol.abs_tol);
    }
  }
}

TEST_CASE("random tripotent generation is deterministic") {
  ModuleSpace sp{3, 2};
  Rng a = Rng::derive(99, "det", 3, 2);
  Rng b = Rng::derive(99, "det", 3, 2);
  Matrix ca = random_tripotent(sp, a);
  Matrix cb = random_tripotent(sp, b);
  CHECK(op_norm(ca - cb) == 0.0);
}

TEST_CASE("extremality is unitarily invariant") {
  Rng rng(17);
  ModuleSpace sp{2, 2};
  for (int i = 0; i < 20; ++i) {
    Matrix c = random_tripotent(sp, rng);
    Matrix hu = rng.gaussian_matrix(2, 2);
    Matrix hv = rng.gaussian_matrix(2, 2);
    Matrix u = unitary_exp(0.5 * (hu + adjoint(hu)), 1.0, tol);
    Matrix v = unitary_exp(0.5 * (hv + adjoint(hv)), 1.0, tol);
    CHECK(classify(c, tol).is_extreme == classify(u * c * v, tol).is_extreme);
  }
}

TEST_CASE("every random extreme point is a tripotent and in a family") {
  Rng rng(19);
  for (ModuleSpace sp : {ModuleSpace{2, 2}, ModuleSpace{2, 3}}) {
    for (int i = 0; i < 100; ++i) {
      Matrix c = random_tripotent(sp, rng);
      ExtremeClassification cls = classify(c, tol);
      if (cls.is_extreme) {
        CHECK(cls.is_tripotent);
        CHECK((cls.family_full_norm || cls.family_full_range));
      }
    }
  }
}

TEST_CASE("search finds nothing outside the families") {
  CHECK(search_outside_families(ModuleSpace{1, 1}, 100, 42, tol).empty());
  CHECK(search_outside_families(ModuleSpace{2, 2}, 200, 42, tol).empty());
  CHECK(search_outside_families(ModuleSpace{2, 3}, 200, 42, tol).empty());
}

TEST_CASE("findings serialize in the fixture format") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "matriple_extremal_test";
  fs::create_directories(dir);
  fs::path file = dir / "finding.fixture";

  Matrix c = Matrix::Identity(2, 2);
  ExtremeClassification cls = classify(c, tol);
  write_matrix_file(file, c,
                    {"classification", "is_extreme: " +
                     std::string(cls.is_extreme ? "yes" : "no")});
  Matrix back = read_matrix_file(file);
  CHECK(op_norm(back - c) == 0.0);
  fs::remove_all(dir);
}
