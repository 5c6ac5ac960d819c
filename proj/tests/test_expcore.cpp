#include <gtest/gtest.h>

#include <random>

#include "altexp/altgroup.hpp"
#include "altexp/errors.hpp"
#include "altexp/expcore.hpp"
#include "oracles.hpp"

using namespace altexp;

namespace {

constexpr double kPi = oracle::kPi;

std::vector<double> random_vector(std::mt19937_64& rng, int n, double a, double b) {
  std::uniform_real_distribution<double> u(a, b);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST(EvalE, TwoDimensionalClosedForms) {
  for (double c : {0.5, 1.0, 2.3}) {
    const Weight lambda{c, -c};
    for (double t : {0.0, 0.13, 0.4}) {
      const Point x{0.3 + t, 0.1};
      const double d = x[0] - x[1];
      const Complex phase = std::exp(Complex(0.0, 2.0 * kPi * c * d));
      EXPECT_LT(std::abs(eval_E(lambda, x) - phase), 1e-13);
      EXPECT_LT(std::abs(eval_E_minus(lambda, x) - Complex(0.0, 2.0 * std::sin(2.0 * kPi * c * d))), 1e-13);
      EXPECT_LT(std::abs(eval_E_plus(lambda, x) - 2.0 * std::cos(2.0 * kPi * c * d)), 1e-13);
    }
  }
  EXPECT_LT(std::abs(eval_E_plus(Weight{1, -1}, Point{0.3, 0.1}) - 2.0 * std::cos(2.0 * kPi * 0.2)), 1e-13);
}

TEST(EvalE, ZeroWeightCountsGroup) {
  EXPECT_LT(std::abs(eval_E(Weight{0, 0, 0}, Point{0.2, 0.5, 0.9}) - 3.0), 1e-14);
  EXPECT_LT(std::abs(eval_E(Weight{0, 0, 0, 0}, Point{0.2, 0.5, 0.9, 0.1}) - 12.0), 1e-13);
}

TEST(EvalE, FrozenEnumerationValues) {
  // Even-permutation sums evaluated independently in Python.
  EXPECT_LT(std::abs(eval_E(Weight{2, 1, 0}, Point{0.1, 0.2, 0.3}) -
                     Complex(-1.4270509831248424, -1.314327780297834)), 1e-12);
  EXPECT_LT(std::abs(eval_E(Weight{1.5, -0.25, 0.75, 0.5}, Point{0.3, -0.6, 0.2, 0.45}) -
                     Complex(0.7219345919324851, 3.629410284753951)), 1e-12);
  EXPECT_LT(std::abs(eval_E(IntegerWeight{3, 2, 1}, Point{0.11, 0.52, 0.83}) -
                     Complex(-0.04740344616246128, 2.819477897653496)), 1e-12);
}

TEST(EvalE, MatchesEnumerationOracle) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 7; ++n) {
    for (int t = 0; t < 5; ++t) {
      const auto lambda = random_vector(rng, n, -3, 3);
      const auto x = random_vector(rng, n, -1, 1);
      const Complex expected = oracle::alternating_exponential(lambda, x);
      EXPECT_LT(std::abs(eval_E(Weight(lambda), Point(x)) - expected), 1e-10 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST(EvalE, DimensionMismatch) {
  EXPECT_THROW(eval_E(Weight{1, 2}, Point{0.1, 0.2, 0.3}), DimensionError);
}

TEST(Relations, StrictlySemidominant) {
  std::mt19937_64 rng(9);
  const auto r = relation_check(Weight{3, 2, 1}, Point{0.27, 0.61, 0.05});
  EXPECT_LT(r.max(), 1e-10);
  for (int n = 2; n <= 6; ++n) {
    for (int t = 0; t < 20; ++t) {
      auto v = random_vector(rng, n, -3, 3);
      std::sort(v.begin(), v.end(), std::greater<>());
      std::swap(v[0], v[1]);
      EXPECT_LT(relation_check(Weight(v), Point(random_vector(rng, n, -1, 1))).max(), 1e-10);
    }
  }
  EXPECT_THROW(relation_check(Weight{2, 2, 1}, Point{0.1, 0.2, 0.3}), DomainError);
}

TEST(Relations, RepeatedEntry) {
  std::mt19937_64 rng(10);
  for (int n = 2; n <= 5; ++n) {
    auto lambda = random_vector(rng, n, -3, 3);
    lambda[n - 1] = lambda[0];
    const auto x = random_vector(rng, n, -1, 1);
    EXPECT_LT(std::abs(eval_E_minus(Weight(lambda), Point(x))), 1e-12);
    // r12 λ lies in the orbit of λ, so E⁺ = E_λ + E_{r12 λ} = 2 E_λ
    EXPECT_LT(std::abs(eval_E_plus(Weight(lambda), Point(x)) - 2.0 * eval_E(Weight(lambda), Point(x))), 1e-12);
  }
}

TEST(Identities, Translation) {
  EXPECT_EQ(translate_identity(Weight{1.3, 0.2, -0.7}, Point{0.1, 0.5, 0.3}, 0.0), 0.0);
  const Weight balanced{1.0, 0.5, -1.5};
  const Point x{0.1, 0.5, 0.3};
  const Point moved{0.1 + 0.37, 0.5 + 0.37, 0.3 + 0.37};
  EXPECT_LT(std::abs(eval_E(balanced, moved) - eval_E(balanced, x)), 1e-12);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t)
    EXPECT_LT(translate_identity(Weight(random_vector(rng, 3, -3, 3)), Point(random_vector(rng, 3, -1, 1)), 0.83), 1e-10);
}

TEST(Identities, HyperplaneShift) {
  EXPECT_EQ(hyperplane_shift_identity(Weight{1, 2, 0}, Point{0.2, 0.1, -0.3}, 0.0), 0.0);
  const double t = 0.17;
  EXPECT_LT(hyperplane_shift_identity(Weight{1, -1}, Point{t, -t}, 5.0), 1e-12);
  EXPECT_LT(std::abs(eval_E(Weight{1, -1}, Point{t, -t}) - std::exp(Complex(0, 4 * kPi * t))), 1e-12);
  EXPECT_LT(hyperplane_shift_identity(Weight{2.4, -0.3, 1.1}, Point{0.2, 0.1, -0.3}, 1.7), 1e-10);
  EXPECT_THROW(hyperplane_shift_identity(Weight{1, 2}, Point{0.2, 0.1}, 1.0), DomainError);
}

TEST(Identities, SymmetryScalingDuality) {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 5; ++n) {
    const auto& group = alternating_group(n);
    const Weight lambda(random_vector(rng, n, -3, 3));
    const Point x(random_vector(rng, n, -1, 1));
    const Complex e = eval_E(lambda, x);
    for (const auto& w : group.elements()) {
      EXPECT_LT(std::abs(eval_E(apply(w, lambda), x) - e), 1e-10);
      EXPECT_LT(std::abs(eval_E(lambda, apply(w, x)) - e), 1e-10);
    }
    EXPECT_LT(std::abs(eval_E(Weight(x.vector()), Point(lambda.vector())) - e), 1e-10);
    std::vector<double> scaled(lambda.begin(), lambda.end()), scaled_x(x.begin(), x.end());
    for (double& v : scaled) v *= 1.7;
    for (double& v : scaled_x) v *= 1.7;
    EXPECT_LT(std::abs(eval_E(Weight(scaled), x) - eval_E(lambda, Point(scaled_x))), 1e-10);
  }
}

TEST(Conjugation, PartnerExamples) {
  const auto four = conjugation_partner(Weight{4, 3, 2, 1});
  EXPECT_EQ(four.weight, (Weight{-1, -2, -3, -4}));
  EXPECT_EQ(four.flag, ConjugationFlag::plain);

  const auto three = conjugation_partner(Weight{3, 2, 1});
  EXPECT_EQ(three.weight, (Weight{-2, -1, -3}));
  EXPECT_EQ(three.flag, ConjugationFlag::r12_swapped);

  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    const Point x(random_vector(rng, 3, -1, 1));
    EXPECT_LT(std::abs(eval_E(Weight{3, 2, 1}, x) - std::conj(eval_E(three.weight, x))), 1e-10);
  }
}

TEST(Conjugation, AllResiduesModFour) {
  std::mt19937_64 rng(15);
  for (int n = 2; n <= 7; ++n) {
    auto v = random_vector(rng, n, -3, 3);
    std::sort(v.begin(), v.end(), std::greater<>());
    const Weight lambda(v);
    const auto partner = conjugation_partner(lambda);
    for (int t = 0; t < 10; ++t) {
      const Point x(random_vector(rng, n, -1, 1));
      EXPECT_LT(std::abs(eval_E(lambda, x) - std::conj(eval_E(partner.weight, x))), 1e-10) << "n=" << n;
    }
  }
}

TEST(Laplace, SpectrumExamples) {
  const double c = -4.0 * kPi * kPi;
  EXPECT_NEAR(laplace_spectrum(Weight{1, 0, 0}).eigenvalues[0], c, 1e-12);
  EXPECT_NEAR(laplace_spectrum(Weight{1, 1, 1}).eigenvalues[2], c * c * c, 1e-6);
  const auto s = laplace_spectrum(Weight{2, 1, 0}).eigenvalues;
  ASSERT_EQ(s.size(), 3U);
  EXPECT_NEAR(s[0], c * 5.0, 1e-10);
  EXPECT_NEAR(s[1], c * c * 4.0, 1e-8);
  EXPECT_NEAR(s[2], 0.0, 1e-12);
}

TEST(Laplace, ElementarySymmetricMatchesSubsets) {
  std::mt19937_64 rng(16);
  for (int n = 1; n <= 8; ++n) {
    const auto y = random_vector(rng, n, -2, 2);
    const auto sigma = elementary_symmetric(y);
    ASSERT_EQ(sigma.size(), static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) EXPECT_NEAR(sigma[k], oracle::elementary_symmetric(y, k), 1e-12);
  }
}

TEST(Laplace, FiniteDifference) {
  const Weight lambda{1.2, -0.4, 0.7};
  const Point x{0.31, 0.62, 0.15};
  const double h = 1e-4;
  Complex lap = 0.0;
  for (int i = 0; i < 3; ++i) {
    Point p = x, m = x;
    p[i] += h;
    m[i] -= h;
    lap += (eval_E(lambda, p) - 2.0 * eval_E(lambda, x) + eval_E(lambda, m)) / (h * h);
  }
  const Complex exact = laplace_spectrum(lambda).eigenvalues[0] * eval_E(lambda, x);
  EXPECT_LT(std::abs(lap - exact) / std::abs(exact), 1e-5);
}
