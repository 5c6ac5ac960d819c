#include "altexp/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "altexp/altgroup.hpp"
#include "altexp/errors.hpp"

namespace altexp {

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), data_(std::move(entries)) {
  if (data_.size() != n * n) {
    throw DimensionError("matrix of dimension " + std::to_string(n) + " needs " +
                         std::to_string(n * n) + " entries, got " +
                         std::to_string(data_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Complex det(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  std::vector<Complex> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

  Complex result = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i * n + k]) > std::abs(a[pivot * n + k])) pivot = i;
    if (a[pivot * n + k] == 0.0) return 0.0;
    if (pivot != k) {
      std::swap_ranges(a.begin() + k * n, a.begin() + (k + 1) * n, a.begin() + pivot * n);
      result = -result;
    }
    const Complex diag = a[k * n + k];
    result *= diag;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex factor = a[i * n + k] / diag;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= factor * a[k * n + j];
    }
  }
  return result;
}

Complex antidet(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n > kMaxPermanentDim) {
    throw SizeLimitError("permanent limited to n <= " + std::to_string(kMaxPermanentDim) +
                         " (2^n subsets), got n = " + std::to_string(n));
  }
  if (n == 0) return 1.0;

  // perm(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij, walking the
  // subsets in Gray-code order so each step adds or removes one column.
  std::vector<Complex> row_sums(n, 0.0);
  Complex total = 0.0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const auto column = static_cast<std::size_t>(std::countr_zero(k));
    const std::uint64_t gray = k ^ (k >> 1);
    const bool added = (gray >> column) & 1U;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) {
        row_sums[i] += m(i, column);
      } else {
        row_sums[i] -= m(i, column);
      }
    }
    Complex product = 1.0;
    for (const Complex& s : row_sums) product *= s;
    if (std::popcount(gray) % 2 == 0) {
      total += product;
    } else {
      total -= product;
    }
  }
  return n % 2 == 0 ? total : -total;
}

Complex antidet_naive(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> w(n);
  std::iota(w.begin(), w.end(), std::size_t{0});
  Complex total = 0.0;
  do {
    Complex term = 1.0;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, w[i]);
    total += term;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

namespace {

Complex sdet_naive(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1.0;
  const auto& group = alternating_group(static_cast<int>(n));
  Complex total = 0.0;
  for (std::size_t k = 0; k < group.size(); ++k) {
    const auto w = group.images(k);
    Complex term = 1.0;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, w[i]);
    total += term;
  }
  return total;
}

}  // namespace

EvalResult sdet(const ComplexMatrix& m, SdetStrategy strategy) {
  if (strategy == SdetStrategy::automatic) {
    strategy = m.dim() < kSdetSwitchDim ? SdetStrategy::naive_enumeration
                                        : SdetStrategy::det_plus_permanent;
  }
  if (strategy == SdetStrategy::naive_enumeration) return {sdet_naive(m), strategy};
  return {0.5 * (det(m) + antidet(m)), strategy};
}

const char* to_string(SdetStrategy strategy) {
  switch (strategy) {
    case SdetStrategy::automatic: return "automatic";
    case SdetStrategy::naive_enumeration: return "naive-enumeration";
    case SdetStrategy::det_plus_permanent: return "det-plus-permanent";
  }
  return "unknown";
}

}  // namespace altexp
