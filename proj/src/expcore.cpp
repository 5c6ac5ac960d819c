#include "altexp/expcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "altexp/altgroup.hpp"
#include "altexp/errors.hpp"

namespace altexp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex phase(double turns) { return std::polar(1.0, kTwoPi * turns); }

void require_same_dimension(const Weight& lambda, const Point& x) {
  if (lambda.size() != x.size()) {
    throw DimensionError("weight has " + std::to_string(lambda.size()) +
                         " entries but point has " + std::to_string(x.size()));
  }
  if (lambda.empty()) throw DimensionError("empty weight");
}

}  // namespace

ComplexMatrix exponential_matrix(const Weight& lambda, const Point& x) {
  require_same_dimension(lambda, x);
  const std::size_t n = lambda.size();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = phase(lambda[i] * x[j]);
  return m;
}

EvalResult eval_E_with(const Weight& lambda, const Point& x, SdetStrategy strategy) {
  return sdet(exponential_matrix(lambda, x), strategy);
}

Complex eval_E(const Weight& lambda, const Point& x) { return eval_E_with(lambda, x).value; }

Complex eval_E(const IntegerWeight& m, const Point& x) { return eval_E(to_real(m), x); }

Complex eval_E_plus(const Weight& lambda, const Point& x) {
  return antidet(exponential_matrix(lambda, x));
}

Complex eval_E_minus(const Weight& lambda, const Point& x) {
  return det(exponential_matrix(lambda, x));
}

Weight swap_first_two(const Weight& lambda) {
  Weight out = lambda;
  if (out.size() >= 2) std::swap(out[0], out[1]);
  return out;
}

double RelationResiduals::max() const {
  return std::max({minus_relation, plus_relation, product_identity, sum_identity});
}

RelationResiduals relation_check(const Weight& lambda, const Point& x) {
  require_same_dimension(lambda, x);
  if (!is_strictly_semidominant(lambda)) {
    throw DomainError("relation_check needs a strictly semidominant weight, got " +
                      to_string(lambda));
  }
  const Complex e = eval_E(lambda, x);
  const Complex e_swapped = eval_E(swap_first_two(lambda), x);
  const Complex plus = eval_E_plus(lambda, x);
  const Complex minus = eval_E_minus(lambda, x);
  return {
      std::abs(minus - (e - e_swapped)),
      std::abs(plus - (e + e_swapped)),
      std::abs(plus * plus - minus * minus - 4.0 * e * e_swapped),
      std::abs(plus * plus + minus * minus - 2.0 * e * e - 2.0 * e_swapped * e_swapped),
  };
}

double translate_identity(const Weight& lambda, const Point& x, double a) {
  require_same_dimension(lambda, x);
  Point shifted = x;
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    shifted[i] += a;
    total += lambda[i];
  }
  return std::abs(eval_E(lambda, shifted) - phase(total * a) * eval_E(lambda, x));
}

double hyperplane_shift_identity(const Weight& lambda, const Point& x, double nu) {
  require_same_dimension(lambda, x);
  double sum = 0.0;
  for (double v : x) sum += v;
  if (std::abs(sum) > 1e-12) {
    throw DomainError("point is off the hyperplane sum(x) = 0 (sum = " + std::to_string(sum) +
                      ")");
  }
  Weight shifted = lambda;
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += nu;
  return std::abs(eval_E(shifted, x) - eval_E(lambda, x));
}

ConjugationPartner conjugation_partner(const Weight& lambda) {
  const std::size_t n = lambda.size();
  std::vector<double> mu(n);
  for (std::size_t i = 0; i < n; ++i) mu[i] = -lambda[n - 1 - i];
  // Reversal is a product of floor(n/2) transpositions: even iff n ≡ 0, 1 (mod 4).
  if ((n / 2) % 2 == 0) return {Weight(std::move(mu)), ConjugationFlag::plain};
  std::swap(mu[0], mu[1]);
  return {Weight(std::move(mu)), ConjugationFlag::r12_swapped};
}

std::vector<double> elementary_symmetric(std::span<const double> values) {
  std::vector<double> sigma(values.size() + 1, 0.0);
  sigma[0] = 1.0;
  for (std::size_t j = 0; j < values.size(); ++j)
    for (std::size_t k = j + 1; k >= 1; --k) sigma[k] += values[j] * sigma[k - 1];
  return sigma;
}

LaplaceSpectrum laplace_spectrum(const Weight& lambda) {
  std::vector<double> squares(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) squares[i] = lambda[i] * lambda[i];
  const auto sigma = elementary_symmetric(squares);
  const double scale = -4.0 * std::numbers::pi * std::numbers::pi;
  LaplaceSpectrum out;
  double power = 1.0;
  for (std::size_t k = 1; k < sigma.size(); ++k) {
    power *= scale;
    out.eigenvalues.push_back(power * sigma[k]);
  }
  return out;
}

}  // namespace altexp
