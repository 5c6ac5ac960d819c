#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace altexp {

using Complex = std::complex<double>;

/// Largest dimension accepted by the permanent (Ryser visits 2^n subsets).
inline constexpr std::size_t kMaxPermanentDim = 20;

/// Square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}
  /// Throws DimensionError unless `entries.size() == n * n`.
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

/// Determinant by LU elimination with partial pivoting.
Complex det(const ComplexMatrix& m);

/// Permanent (antideterminant) by Ryser's formula over a Gray-code walk.
/// Throws SizeLimitError when dim() > kMaxPermanentDim.
Complex antidet(const ComplexMatrix& m);

/// Reference permanent: sum over all n! permutations.
Complex antidet_naive(const ComplexMatrix& m);

enum class SdetStrategy { automatic, naive_enumeration, det_plus_permanent };

/// Dimension from which `automatic` switches to det-plus-permanent.
inline constexpr std::size_t kSdetSwitchDim = 5;

struct EvalResult {
  Complex value;
  SdetStrategy strategy;  // never `automatic`
};

/// Semideterminant: sum over w in A_n of a_{1,w(1)} ... a_{n,w(n)}.
EvalResult sdet(const ComplexMatrix& m, SdetStrategy strategy = SdetStrategy::automatic);

const char* to_string(SdetStrategy strategy);

}  // namespace altexp
