#include "altexp/hermite.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "altexp/altgroup.hpp"
#include "altexp/errors.hpp"
#include "altexp/matrix.hpp"

namespace altexp {

namespace {

const double kSqrtTwoPi = std::sqrt(2.0 * std::numbers::pi);

constexpr std::array<Complex, 4> kFourthRoots = {Complex(1, 0), Complex(0, 1), Complex(-1, 0),
                                                 Complex(0, -1)};

}  // namespace

double hermite_polynomial(int m, double t) {
  if (m < 0 || m > kMaxHermiteDegree) {
    throw DomainError("Hermite degree must lie in [0, " + std::to_string(kMaxHermiteDegree) +
                      "], got " + std::to_string(m));
  }
  double previous = 1.0;
  if (m == 0) return previous;
  double current = 2.0 * t;
  for (int k = 1; k < m; ++k) {
    const double next = 2.0 * t * current - 2.0 * k * previous;
    previous = current;
    current = next;
  }
  return current;
}

HermiteIndex::HermiteIndex(std::vector<int> m) : m_(std::move(m)) {
  if (m_.empty()) throw DomainError("empty Hermite index");
  for (int v : m_) {
    if (v < 0) throw DomainError("Hermite index entries must be non-negative");
  }
  if (!is_semidominant(std::span<const int>(m_))) {
    throw DomainError("Hermite index must satisfy m_1, m_2 >= m_3 >= ... >= m_n");
  }
}

int HermiteIndex::degree() const {
  int total = 0;
  for (int v : m_) total += v;
  return total;
}

double symmetrized_hermite(const HermiteIndex& m, const Weight& lambda) {
  if (m.size() != lambda.size()) throw DimensionError("Hermite index length differs from weight");
  const std::size_t n = m.size();
  ComplexMatrix values(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) values(i, j) = hermite_polynomial(m[i], lambda[j]);
  return sdet(values).value.real();
}

ComplexFunction hermite_function(const HermiteIndex& m) {
  return [m](const Point& x) {
    std::vector<double> scaled(x.size());
    double norm2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      scaled[i] = kSqrtTwoPi * x[i];
      norm2 += x[i] * x[i];
    }
    return Complex(std::exp(-std::numbers::pi * norm2) *
                   symmetrized_hermite(m, Weight(std::move(scaled))));
  };
}

Complex stated_hermite_eigenvalue(int degree) {
  // i^{-d} = (−i)^d
  return kFourthRoots[static_cast<std::size_t>((4 - degree % 4) % 4)];
}

double hermite_eigenfunction_residual(const HermiteIndex& m, const Weight& lambda,
                                      const QuadratureSpec& quadrature) {
  const auto phi = hermite_function(m);
  const Complex transformed = alt_fourier_forward(phi, lambda, quadrature);
  return std::abs(transformed - stated_hermite_eigenvalue(m.degree()) * phi(Point(lambda.vector())));
}

Complex recover_hermite_eigenvalue(const HermiteIndex& m, const Weight& lambda,
                                   const QuadratureSpec& quadrature) {
  const auto phi = hermite_function(m);
  const Complex transformed = alt_fourier_forward(phi, lambda, quadrature);
  const Complex value = phi(Point(lambda.vector()));
  Complex best = kFourthRoots[0];
  double best_residual = std::numeric_limits<double>::infinity();
  for (const Complex& c : kFourthRoots) {
    const double r = std::abs(transformed - c * value);
    if (r < best_residual) {
      best_residual = r;
      best = c;
    }
  }
  return best;
}

Complex hermite_1d_transform(int m, double x, int nodes, double half_width) {
  const Rule1D rule = gauss_legendre_rule(nodes, -half_width, half_width);
  Complex total = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double p = rule.nodes[k];
    total += rule.weights[k] * std::polar(1.0, 2.0 * std::numbers::pi * p * x) *
             std::exp(-std::numbers::pi * p * p) * hermite_polynomial(m, kSqrtTwoPi * p);
  }
  return total;
}

double hermite_1d_residual(int m, double x, int nodes, double half_width) {
  const Complex rhs = stated_hermite_eigenvalue(m) * std::exp(-std::numbers::pi * x * x) *
                      hermite_polynomial(m, kSqrtTwoPi * x);
  return std::abs(hermite_1d_transform(m, x, nodes, half_width) - rhs);
}

}  // namespace altexp
