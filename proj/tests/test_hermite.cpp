#include <gtest/gtest.h>

#include <random>

#include "altexp/altgroup.hpp"
#include "altexp/errors.hpp"
#include "altexp/hermite.hpp"
#include "oracles.hpp"

using namespace altexp;

namespace {

constexpr double kPi = oracle::kPi;
const Complex kI(0.0, 1.0);

Complex i_power(int k) { return std::pow(kI, ((k % 4) + 4) % 4); }

}  // namespace

TEST(HermitePolynomial, BaseCasesAndExplicitSum) {
  EXPECT_EQ(hermite_polynomial(0, 3.7), 1.0);
  EXPECT_EQ(hermite_polynomial(2, 1.0), 2.0);
  for (int m = 0; m <= 12; ++m)
    for (double t : {-1.3, 0.0, 0.4, 2.1})
      EXPECT_NEAR(hermite_polynomial(m, t), oracle::hermite(m, t), 1e-9 * std::max(1.0, std::abs(oracle::hermite(m, t))));
  EXPECT_THROW(hermite_polynomial(-1, 0.0), DomainError);
  EXPECT_THROW(hermite_polynomial(kMaxHermiteDegree + 1, 0.0), DomainError);
}

TEST(HermiteIndex, Validation) {
  EXPECT_EQ(HermiteIndex({1, 3, 0}).degree(), 4);
  EXPECT_THROW(HermiteIndex({0, 0, 1}), DomainError);
  EXPECT_THROW(HermiteIndex({-1, 0}), DomainError);
}

TEST(SymmetrizedHermite, Examples) {
  EXPECT_NEAR(symmetrized_hermite(HermiteIndex({0, 0, 0}), Weight{0.3, -1.0, 2.0}), 3.0, 1e-12);
  EXPECT_NEAR(symmetrized_hermite(HermiteIndex({1, 0}), Weight{0.7, -0.4}), 1.4, 1e-12);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int t = 0; t < 10; ++t) {
    const std::vector<int> m = {int(rng() % 4) + 2, int(rng() % 4) + 2, int(rng() % 2)};
    const Weight lambda{u(rng), u(rng), u(rng)};
    double expected = 0.0;
    for (const auto& p : oracle::even_permutations(3)) {
      double product = 1.0;
      for (int i = 0; i < 3; ++i) product *= oracle::hermite(m[i], lambda[p[i]]);
      expected += product;
    }
    EXPECT_NEAR(symmetrized_hermite(HermiteIndex(m), lambda), expected, 1e-9 * std::max(1.0, std::abs(expected)));
  }
}

TEST(HermiteOneDimensional, TrueEigenvalueIsPositivePower) {
  // With the kernel exp(+2πipx) the eigenvalue is i^{+m}; i^{-m} differs for odd m.
  for (int m = 0; m <= 6; ++m) {
    for (double x : {0.4, -0.7, 1.1}) {
      const Complex expected = i_power(m) * std::exp(-kPi * x * x) * oracle::hermite(m, std::sqrt(2 * kPi) * x);
      EXPECT_LT(std::abs(hermite_1d_transform(m, x) - expected), 1e-10) << "m=" << m;
    }
  }
  EXPECT_LT(hermite_1d_residual(2, 0.4), 1e-10);
  EXPECT_GT(hermite_1d_residual(3, 0.4), 1.0);
}

TEST(HermiteEigenfunction, EvenDegreesMatchStatedEigenvalue) {
  const auto box = QuadratureSpec::box(6.0, 96);
  EXPECT_LT(hermite_eigenfunction_residual(HermiteIndex({0, 0}), Weight{0, 0}, box), 1e-4);
  EXPECT_EQ(stated_hermite_eigenvalue(2), Complex(-1.0, 0.0));
  for (const auto& m : {std::vector<int>{2, 0}, {1, 1}, {0, 2}, {3, 1}, {2, 2}})
    EXPECT_LT(hermite_eigenfunction_residual(HermiteIndex(m), Weight{0.3, -0.6}, box), 1e-4);
}

TEST(HermiteEigenfunction, RecoveredEigenvalueIsPositivePower) {
  const auto box = QuadratureSpec::box(6.0, 96);
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      const HermiteIndex m({a, b});
      EXPECT_LT(std::abs(recover_hermite_eigenvalue(m, Weight{0.8, 0.45}, box) - i_power(m.degree())), 1e-12)
          << a << "," << b;
    }
  }
}

TEST(HermiteEigenfunction, SquareOfTransformIsParity) {
  const GridTransform transform(2, QuadratureSpec::box(6.0, 128, QuadratureScheme::midpoint_tensor));
  for (const auto& m : {std::vector<int>{1, 0}, {2, 1}, {2, 0}}) {
    const auto f = transform.sample(hermite_function(HermiteIndex(m)));
    const auto g = transform.forward(transform.forward(f));
    const double sign = (m[0] + m[1]) % 2 ? -1.0 : 1.0;
    double worst = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) worst = std::max(worst, std::abs(g[k] - sign * f[k]));
    EXPECT_LT(worst, 1e-8);
  }
}

TEST(HermiteEigenfunction, FourthPowerIsIdentity) {
  const GridTransform transform(2, QuadratureSpec::box(6.0, 128, QuadratureScheme::midpoint_tensor));
  std::vector<Complex> f(transform.size(), 0.0);
  const std::vector<std::pair<std::vector<int>, Complex>> terms = {
      {{0, 0}, {0.5, 0.1}}, {{1, 0}, {-0.3, 0.8}}, {{1, 1}, {0.2, -0.4}}, {{3, 0}, {0.9, 0.0}}};
  for (const auto& [m, c] : terms) {
    const auto values = transform.sample(hermite_function(HermiteIndex(m)));
    for (std::size_t k = 0; k < f.size(); ++k) f[k] += c * values[k];
  }
  auto g = f;
  for (int r = 0; r < 4; ++r) g = transform.forward(g);
  double worst = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) worst = std::max(worst, std::abs(g[k] - f[k]));
  EXPECT_LT(worst, 1e-3);
}
