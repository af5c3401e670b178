#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qwalk/local_unitary.hpp"
#include "qwalk/random_fixtures.hpp"
#include "support/error_kind.hpp"

namespace qwalk {
namespace {

using testing::kind_of;

TEST(LocalUnitary, GroverEntries) {
  const Matrix g = standard_matrix(StandardUnitary::Grover, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(std::abs(g(r, c) - Complex(r == c ? -1.0 / 3 : 2.0 / 3)), 0.0, 1e-15);
  EXPECT_LT(unitarity_deviation(g), 1e-15);
}

TEST(LocalUnitary, HadamardAndDft) {
  const double h = 1.0 / std::sqrt(2.0);
  const Matrix had = standard_matrix(StandardUnitary::Hadamard, 2);
  EXPECT_NEAR(had(0, 0).real(), h, 1e-15);
  EXPECT_NEAR(had(1, 1).real(), -h, 1e-15);
  EXPECT_EQ(kind_of([] { standard_matrix(StandardUnitary::Hadamard, 3); }), ErrorKind::DimensionMismatch);

  // a, b in 1..2: entry (1,1) carries e^{iπ}, the rest e^0
  const Matrix dft2 = standard_matrix(StandardUnitary::Dft, 2);
  EXPECT_NEAR(std::abs(dft2(0, 0) - Complex(-h, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(dft2(0, 1) - Complex(h, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(dft2(1, 1) - Complex(h, 0)), 0.0, 1e-15);

  for (int n = 1; n <= 9; ++n) {
    const Matrix f = standard_matrix(StandardUnitary::Dft, n);
    EXPECT_LT(unitarity_deviation(f), 1e-13) << n;
    const double angle = 2.0 * std::numbers::pi * ((1 * 1) % n) / n;
    EXPECT_NEAR(std::abs(f(0, 0) - std::polar(1.0 / std::sqrt(n), angle)), 0.0, 1e-14);
  }
}

TEST(LocalUnitary, RandomUnitariesAreUnitary) {
  fixtures::Rng rng(5);
  for (int n = 1; n <= 12; ++n) EXPECT_LT(unitarity_deviation(fixtures::random_unitary(n, rng)), 1e-13);
}

TEST(LocalUnitary, NonUnitaryRejected) {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 1) = 1.001;
  EXPECT_EQ(kind_of([&] { LocalUnitaryFamily(UnitaryRole::Coin, {m}); }), ErrorKind::UnitarityViolation);
  EXPECT_NO_THROW(LocalUnitaryFamily::unchecked(UnitaryRole::Coin, {m}));
  EXPECT_NEAR(LocalUnitaryFamily::unchecked(UnitaryRole::Coin, {m}).max_unitarity_deviation(), 1.001 * 1.001 - 1,
              1e-12);
  EXPECT_TRUE(std::isinf(unitarity_deviation(Matrix::Zero(2, 3))));
}

TEST(LocalUnitary, StandardFamilyWithOverrides) {
  const auto g = fixtures::path_graph(3);
  const Matrix swap = (Matrix(2, 2) << 0, 1, 1, 0).finished();
  const auto family = LocalUnitaryFamily::standard(g, UnitaryRole::Coin, StandardUnitary::Grover, {{1, swap}});
  ASSERT_EQ(family.size(), 3u);
  EXPECT_EQ(family[0].rows(), 1);
  EXPECT_NEAR(family[0](0, 0).real(), 1.0, 1e-15);
  EXPECT_EQ(family[1], swap);
  EXPECT_FALSE(family.is_uniform());
  EXPECT_TRUE(LocalUnitaryFamily::standard(fixtures::cycle_graph(5), UnitaryRole::Coin, StandardUnitary::Grover)
                  .is_uniform());
}

TEST(LocalUnitary, DimensionMismatchNamesTheNode) {
  const auto g = fixtures::cycle_graph(3);
  const Matrix big = standard_matrix(StandardUnitary::Grover, 3);
  try {
    LocalUnitaryFamily::standard(g, UnitaryRole::Scattering, StandardUnitary::Grover, {{2, big}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    EXPECT_NE(std::string(e.what()).find("node 2"), std::string::npos) << e.what();
  }
  // a wrong-size matrix is a dimension problem even if it is not unitary
  Matrix off = Matrix::Identity(3, 3) * 2.0;
  EXPECT_EQ(kind_of([&] { LocalUnitaryFamily::standard(g, UnitaryRole::Coin, StandardUnitary::Grover, {{0, off}}); }),
            ErrorKind::DimensionMismatch);
}

}  // namespace
}  // namespace qwalk
