#pragma once

// Brute-force reference implementations shared by the test suites. They
// avoid the library's group tables and matrix kernels on purpose.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

inline constexpr double kPi = std::numbers::pi;

inline int inversions(const std::vector<int>& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

/// Every permutation of {0..n-1} with its sign from the inversion count.
inline std::vector<std::pair<std::vector<int>, int>> symmetric_group(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    out.emplace_back(p, inversions(p) % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<std::vector<int>> even_permutations(int n) {
  std::vector<std::vector<int>> out;
  for (const auto& [p, sign] : symmetric_group(n))
    if (sign == 1) out.push_back(p);
  return out;
}

/// Laplace expansion along the first row.
inline Complex cofactor_det(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Complex total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Complex> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    total += (j % 2 == 0 ? 1.0 : -1.0) * a[0][j] * cofactor_det(minor);
  }
  return total;
}

/// Σ over permutations with the given sign filter: 0 for the permanent,
/// +1 for even permutations only.
inline Complex permutation_sum(const Matrix& a, int only_sign) {
  Complex total = 0.0;
  for (const auto& [p, sign] : symmetric_group(static_cast<int>(a.size()))) {
    if (only_sign != 0 && sign != only_sign) continue;
    Complex term = 1.0;
    for (std::size_t i = 0; i < a.size(); ++i) term *= a[i][p[i]];
    total += term;
  }
  return total;
}

inline Complex permanent(const Matrix& a) { return permutation_sum(a, 0); }
inline Complex semideterminant(const Matrix& a) { return permutation_sum(a, 1); }

/// Σ_{w even} exp(2πi Σ_i λ_i x_{w(i)}).
inline Complex alternating_exponential(const std::vector<double>& lambda,
                                       const std::vector<double>& x) {
  Complex total = 0.0;
  for (const auto& p : even_permutations(static_cast<int>(lambda.size()))) {
    double phase = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) phase += lambda[i] * x[p[i]];
    total += std::exp(Complex(0.0, 2.0 * kPi * phase));
  }
  return total;
}

/// σ_k by summing products over all k-subsets.
inline double elementary_symmetric(const std::vector<double>& y, int k) {
  double total = 0.0;
  for (unsigned subset = 0; subset < (1U << y.size()); ++subset) {
    if (std::popcount(subset) != k) continue;
    double product = 1.0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (subset >> j & 1U) product *= y[j];
    total += product;
  }
  return total;
}

inline Matrix random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(n, std::vector<Complex>(n));
  for (auto& row : a)
    for (auto& v : row) v = Complex(u(rng), u(rng));
  return a;
}

/// Physicists' Hermite polynomial from the explicit sum
/// H_m(t) = m! Σ_k (−1)^k (2t)^{m−2k} / (k! (m−2k)!).
inline double hermite(int m, double t) {
  double total = 0.0;
  for (int k = 0; 2 * k <= m; ++k) {
    total += (k % 2 ? -1.0 : 1.0) * std::pow(2.0 * t, m - 2 * k) /
             (std::tgamma(k + 1.0) * std::tgamma(m - 2.0 * k + 1.0));
  }
  return total * std::tgamma(m + 1.0);
}

}  // namespace oracle
