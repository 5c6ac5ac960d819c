#include <gtest/gtest.h>

#include <map>

#include "altexp/altgroup.hpp"
#include "altexp/continuous.hpp"
#include "altexp/errors.hpp"
#include "altexp/expcore.hpp"
#include "oracles.hpp"

using namespace altexp;

namespace {

constexpr double kPi = oracle::kPi;

ComplexFunction basis(const IntegerWeight& m) {
  return [m](const Point& x) { return eval_E(m, x); };
}

Complex gaussian(const Point& x) {
  double r2 = 0.0;
  for (double c : x) r2 += c * c;
  return std::exp(-kPi * r2);
}

/// Periodic and fully symmetric, so invariant under the affine group.
Complex smooth_symmetric(const Point& x) {
  Complex value = 1.0;
  for (double c : x) value *= 1.0 / (1.3 - std::cos(2 * kPi * c));
  return value;
}

}  // namespace

TEST(Quadrature, TorusWeightsSumToOne) {
  const auto spec = QuadratureSpec::torus(7);
  EXPECT_NEAR(integrate(3, spec, [](const Point&) { return Complex(1.0); }).real(), 1.0, 1e-14);
  EXPECT_THROW(axis_rule(QuadratureSpec::torus(1)), DomainError);
  const auto gl = gauss_legendre_rule(20, -1.0, 1.0);
  double moment = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) moment += gl.weights[i] * std::pow(gl.nodes[i], 10);
  EXPECT_NEAR(moment, 2.0 / 11.0, 1e-14);
}

TEST(SymmetricFunction, RejectsAsymmetricCallable) {
  EXPECT_NO_THROW(SymmetricFunction(3, basis(IntegerWeight{2, 1, 0})));
  EXPECT_THROW(SymmetricFunction(3, [](const Point& x) { return Complex(x[0]); }), DomainError);
}

TEST(TorusOrthogonality, GroupTimesStabilizer) {
  for (int n : {2, 3}) {
    const auto weights = canonical_integer_weights(n, -3, 3);
    const double order = double(alternating_group_order(n));
    const auto spec = QuadratureSpec::torus(8);
    for (std::size_t a = 0; a < weights.size(); a += 7) {
      for (std::size_t b = 0; b < weights.size(); b += 5) {
        const auto& m = weights[a];
        const auto& mp = weights[b];
        const Complex ip = integrate(n, spec, [&](const Point& x) { return eval_E(m, x) * std::conj(eval_E(mp, x)); });
        EXPECT_LT(std::abs(ip - (m == mp ? order * double(stabilizer_order(m)) : 0.0)), 1e-10);
      }
    }
  }
}

TEST(SeriesCoefficient, BasisFunctionAndConstant) {
  const IntegerWeight m0{2, 3, -1};
  const SymmetricFunction f(3, basis(m0));
  const auto spec = QuadratureSpec::torus(16);
  EXPECT_LT(std::abs(series_coefficient(f, m0, spec) - 1.0), 1e-8);
  EXPECT_LT(std::abs(series_coefficient(f, IntegerWeight{3, 2, -1}, spec)), 1e-8);
  EXPECT_LT(std::abs(series_coefficient(f, IntegerWeight{1, 1, 0}, spec)), 1e-8);

  const SymmetricFunction one(3, [](const Point&) { return Complex(1.0); });
  EXPECT_LT(std::abs(series_coefficient(one, IntegerWeight{0, 0, 0}, spec) - 1.0 / 3.0), 1e-12);
  EXPECT_THROW(series_coefficient(one, IntegerWeight{0, 0, 1}, spec), DomainError);
}

TEST(SeriesCoefficient, ExactRecoveryOfBandLimitedFunction) {
  const std::vector<std::pair<IntegerWeight, Complex>> terms = {
      {IntegerWeight{2, 1, -1}, {0.4, -0.2}}, {IntegerWeight{1, 1, 1}, {0.0, 0.7}}, {IntegerWeight{0, 2, -2}, {-1.1, 0.3}}};
  const SymmetricFunction f(3, [&](const Point& x) {
    Complex total = 0.0;
    for (const auto& [m, c] : terms) total += c * eval_E(m, x);
    return total;
  });
  const auto coefficients = series_coefficients(f, 2, QuadratureSpec::torus(8));
  for (const auto& [m, c] : coefficients.values) {
    Complex expected = 0.0;
    for (const auto& [mt, ct] : terms)
      if (mt.vector() == m) expected = ct;
    EXPECT_LT(std::abs(c - expected), 1e-10);
  }
  for (const Point& x : {Point{0.1, 0.7, 0.3}, Point{0.95, 0.2, 0.55}})
    EXPECT_LT(std::abs(series_partial_sum(coefficients, x) - f(x)), 1e-10);
}

TEST(SeriesPartialSum, SingleCoefficient) {
  SeriesCoefficients c;
  c.n = 2;
  c.values[{3, -1}] = 1.0;
  EXPECT_LT(std::abs(series_partial_sum(c, Point{0.2, 0.9}) - eval_E(IntegerWeight{3, -1}, Point{0.2, 0.9})), 1e-14);
}

TEST(SeriesPartialSum, ErrorDecreasesWithCutoff) {
  const SymmetricFunction f(2, smooth_symmetric);
  const std::vector<Point> probes = {Point{0.13, 0.71}, Point{0.52, 0.48}, Point{0.9, 0.05}};
  double previous = std::numeric_limits<double>::infinity();
  for (int cutoff : {2, 4, 8}) {
    const auto c = series_coefficients(f, cutoff, QuadratureSpec::torus(64));
    double worst = 0.0;
    for (const auto& x : probes) worst = std::max(worst, std::abs(series_partial_sum(c, x) - f(x)));
    EXPECT_LT(worst, previous) << "cutoff " << cutoff;
    previous = worst;
  }
}

TEST(Plancherel, WeightedReading) {
  const auto spec = QuadratureSpec::torus(16);
  const auto strict = plancherel_residual(SymmetricFunction(3, basis(IntegerWeight{3, 1, 0})), 3, spec);
  EXPECT_NEAR(strict.coefficient_side, 1.0, 1e-10);
  EXPECT_NEAR(strict.integral_side, 1.0, 1e-10);

  const auto zero = plancherel_residual(SymmetricFunction(2, [](const Point&) { return Complex(0.0); }), 2, spec);
  EXPECT_EQ(zero.coefficient_side, 0.0);
  EXPECT_EQ(zero.integral_side, 0.0);

  const auto repeated = plancherel_residual(SymmetricFunction(3, basis(IntegerWeight{2, 2, 2})), 2, spec);
  EXPECT_NEAR(repeated.coefficient_side, 3.0, 1e-10);
  EXPECT_NEAR(repeated.integral_side, 3.0, 1e-10);
  EXPECT_LT(repeated.residual(), 1e-10);
}

TEST(AltFourier, GaussianAtOrigin) {
  const auto spec = QuadratureSpec::box(5.0, 64);
  EXPECT_LT(std::abs(alt_fourier_forward(gaussian, Weight{0, 0}, spec) - 1.0), 1e-6);
  // n = 3: the |A_3| summands cancel against the 1/|A_3| factor
  EXPECT_LT(std::abs(alt_fourier_forward(gaussian, Weight{0, 0, 0}, QuadratureSpec::box(5.0, 48)) - 1.0), 1e-6);
}

TEST(AltFourier, Linearity) {
  const auto spec = QuadratureSpec::box(5.0, 48);
  const Complex alpha(0.3, -1.2), beta(2.0, 0.5);
  const ComplexFunction g = [](const Point& x) { return gaussian(x) * std::cos(x[0] + x[1]); };
  const ComplexFunction combined = [&](const Point& x) { return alpha * gaussian(x) + beta * g(x); };
  const Weight lambda{0.4, -0.3};
  const Complex lhs = alt_fourier_forward(combined, lambda, spec);
  const Complex rhs = alpha * alt_fourier_forward(gaussian, lambda, spec) + beta * alt_fourier_forward(g, lambda, spec);
  EXPECT_LT(std::abs(lhs - rhs), 1e-12);
  EXPECT_EQ(alt_fourier_inverse([](const Point&) { return Complex(0.0); }, Point{0.1, 0.2}, spec), Complex(0.0));
}

TEST(AltFourier, InverseOfForwardRecoversGaussian) {
  // the kernel exp(2πiλt) oscillates up to L² times on the box, so the
  // rule must resolve about 2L² periods
  const auto spec = QuadratureSpec::box(4.0, 128);
  const GridTransform transform(2, spec);
  const auto transformed = transform.forward(transform.sample(gaussian));
  std::map<std::vector<double>, Complex> table;
  for (std::size_t k = 0; k < transform.size(); ++k) table[transform.node(k).vector()] = transformed[k];
  // the inverse integral only samples the same quadrature nodes
  const ComplexFunction lookup = [&](const Point& lambda) { return table.at(lambda.vector()); };
  const std::vector<Point> probes = {Point{0.0, 0.0}, Point{0.3, -0.2}, Point{0.7, 0.1}, Point{-0.5, 0.4},
                                     Point{1.0, 0.9}, Point{-1.2, 0.3}, Point{0.25, 0.25}, Point{0.8, -0.8},
                                     Point{-0.1, 1.3}, Point{1.5, -0.6}};
  for (const auto& x : probes)
    EXPECT_LT(std::abs(alt_fourier_inverse(lookup, x, spec) - gaussian(x)), 1e-4) << to_string(x);
}

TEST(GridTransform, MatchesPointwiseForward) {
  const auto spec = QuadratureSpec::box(5.0, 32);
  const GridTransform transform(3, spec);
  const auto values = transform.forward(transform.sample(gaussian));
  for (std::size_t k : {0UL, 777UL, 16000UL}) {
    const Point node = transform.node(k);
    const Weight lambda(node.vector());
    EXPECT_LT(std::abs(values[k] - alt_fourier_forward(gaussian, lambda, spec)), 1e-10);
  }
}

TEST(FundamentalDomain, MonteCarloVolume) {
  for (int n : {2, 3, 4}) {
    const double expected = 1.0 / double(alternating_group_order(n));
    EXPECT_NEAR(fundamental_domain_volume(n, 200000, 0), expected, 0.02 * expected);
  }
}
