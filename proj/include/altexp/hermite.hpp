#pragma once

#include <array>
#include <complex>
#include <vector>

#include "altexp/continuous.hpp"
#include "altexp/quadrature.hpp"
#include "altexp/types.hpp"

namespace altexp {

/// Highest Hermite degree evaluated (double-precision overflow guard).
inline constexpr int kMaxHermiteDegree = 60;

/// Physicists' Hermite polynomial: H_0 = 1, H_1 = 2t,
/// H_{k+1} = 2t H_k − 2k H_{k−1}. Throws DomainError for m outside [0, 60].
double hermite_polynomial(int m, double t);

/// Non-negative integer tuple with m_1, m_2 >= m_3 >= ... >= m_n.
class HermiteIndex {
 public:
  /// Throws DomainError unless the entries are non-negative and semidominant.
  explicit HermiteIndex(std::vector<int> m);

  std::size_t size() const { return m_.size(); }
  int operator[](std::size_t i) const { return m_[i]; }
  const std::vector<int>& values() const { return m_; }
  /// |m| = Σ m_i.
  int degree() const;

 private:
  std::vector<int> m_;
};

/// sdet(H_{m_i}(λ_j)).
double symmetrized_hermite(const HermiteIndex& m, const Weight& lambda);

/// exp(−π|x|²) · sdet(H_{m_i}(√(2π) x_j)).
ComplexFunction hermite_function(const HermiteIndex& m);

/// The eigenvalue the transform is stated to have on hermite_function(m):
/// i^{−|m|}.
Complex stated_hermite_eigenvalue(int degree);

/// |ℱ(hermite_function(m))(λ) − i^{−|m|} hermite_function(m)(λ)|.
double hermite_eigenfunction_residual(const HermiteIndex& m, const Weight& lambda,
                                      const QuadratureSpec& quadrature);

/// The member of {1, i, −1, −i} minimizing |ℱφ(λ) − c φ(λ)|.
Complex recover_hermite_eigenvalue(const HermiteIndex& m, const Weight& lambda,
                                   const QuadratureSpec& quadrature);

/// ∫_{−L}^{L} exp(2πipx) exp(−πp²) H_m(√(2π)p) dp by Gauss–Legendre.
Complex hermite_1d_transform(int m, double x, int nodes = 200, double half_width = 6.0);

/// |hermite_1d_transform(m, x) − i^{−m} exp(−πx²) H_m(√(2π)x)|.
double hermite_1d_residual(int m, double x, int nodes = 200, double half_width = 6.0);

}  // namespace altexp
