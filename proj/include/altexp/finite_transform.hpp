#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "altexp/matrix.hpp"
#include "altexp/types.hpp"

namespace altexp {

/// Integer numerators k of a grid point s = k / N, each in {1, ..., N}.
using GridIndex = std::vector<int>;

/// Largest grid size N^n a GridSpec will enumerate.
inline constexpr std::size_t kMaxGridPoints = std::size_t{1} << 24;

/// Complex values keyed by integer tuples. The tag separates samples
/// (keyed by grid numerators) from coefficients (keyed by weights m).
template <class Tag>
class KeyedValues {
 public:
  using Map = std::map<std::vector<int>, Complex>;

  KeyedValues() = default;
  KeyedValues(int n, int N) : n_(n), N_(N) {}

  int dimension() const { return n_; }
  int density() const { return N_; }
  std::size_t size() const { return values_.size(); }

  const Map& values() const { return values_; }
  bool contains(const std::vector<int>& key) const { return values_.count(key) != 0; }
  void set(std::vector<int> key, Complex value) { values_[std::move(key)] = value; }
  /// Throws DomainError naming the key when absent.
  Complex at(const std::vector<int>& key) const;

 private:
  int n_ = 0;
  int N_ = 0;
  Map values_;
};

struct SampleTag {};
struct CoefficientTag {};
using SampleField = KeyedValues<SampleTag>;
using CoefficientMap = KeyedValues<CoefficientTag>;

/// The grid F_N^n, F_N = {1/N, ..., (N-1)/N, 1}, with its canonical
/// semidominant points and the matching index set of weights.
class GridSpec {
 public:
  /// Throws DomainError for n < 1 or N < 1, SizeLimitError when N^n
  /// exceeds kMaxGridPoints or n exceeds the group size guard.
  GridSpec(int n, int N);

  int dimension() const { return n_; }
  int density() const { return N_; }
  std::size_t full_size() const { return full_size_; }
  std::size_t group_order() const { return group_order_; }

  /// Canonical semidominant points (as numerators), lexicographic order.
  const std::vector<GridIndex>& semidominant_points() const { return points_; }
  /// |G_s| for semidominant_points()[i].
  std::size_t stabilizer(std::size_t i) const { return stabilizers_[i]; }
  /// Weights m with N >= m_1, m_2 >= m_3 >= ... >= m_n >= 1 (canonical).
  const std::vector<IntegerWeight>& index_set() const { return weights_; }

  Point point(const GridIndex& k) const;
  /// True when k is one of semidominant_points().
  bool contains(const GridIndex& k) const;
  /// Numerator of a coordinate s, snapped with tolerance 1e-12.
  /// Throws DomainError when s is not in F_N.
  int snap(double s) const;

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.n_ == b.n_ && a.N_ == b.N_;
  }

 private:
  int n_;
  int N_;
  std::size_t full_size_;
  std::size_t group_order_;
  std::vector<GridIndex> points_;
  std::vector<std::size_t> stabilizers_;
  std::vector<IntegerWeight> weights_;
};

/// e_m(s) = N^{-1/2} exp(2πi m s). Requires 1 <= m <= N and s in F_N.
Complex discrete_exponential(int m, double s, int N);

/// Ẽ_m(s) = |A_n|^{-1/2} sdet(e_{m_i}(s_j)) = |A_n|^{-1/2} N^{-n/2} E_m(s),
/// with s = k / N. Phases are reduced mod N before exponentiating.
Complex eval_discrete_E(const IntegerWeight& m, const GridIndex& k, const GridSpec& grid);

/// Ẽ_m extended to real points by the same formula.
Complex eval_discrete_E(const IntegerWeight& m, const Point& x, int N);

/// |A_n| Σ_s |G_s|^{-1} f(s) conj(g(s)) over the semidominant grid points.
Complex weighted_inner_product(const SampleField& f, const SampleField& g,
                               const GridSpec& grid);

/// a_m = |A_n| |G_m|^{-1} Σ_s |G_s|^{-1} f(s) conj(Ẽ_m(s)).
CoefficientMap forward(const SampleField& f, const GridSpec& grid);

/// f(s) = Σ_m a_m Ẽ_m(s) at every semidominant grid point.
SampleField inverse(const CoefficientMap& a, const GridSpec& grid);

/// Σ_m a_m Ẽ_m(x) at an arbitrary point; points outside the closed affine
/// fundamental domain are reduced into it first.
Complex interpolate(const CoefficientMap& a, const Point& x);

/// Samples of a callable at every semidominant grid point.
SampleField sample(const GridSpec& grid, const std::function<Complex(const Point&)>& f);

/// Samples of the single basis function Ẽ_m.
SampleField basis_samples(const IntegerWeight& m, const GridSpec& grid);

/// Throws DomainError listing keys of `grid` missing from the map and keys
/// not belonging to it, and DimensionError on an n/N mismatch.
template <class Tag>
void check_keys(const KeyedValues<Tag>& values, const GridSpec& grid);

}  // namespace altexp
