#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "altexp/errors.hpp"
#include "altexp/types.hpp"

namespace altexp {

/// Largest n for which the alternating group is enumerated (12!/2 elements).
inline constexpr int kMaxGroupDegree = 12;

/// Bijection of {0, ..., n-1}. Acts on tuples by (w x)_i = x_{w(i)}.
class Permutation {
 public:
  Permutation() = default;
  /// Zero-based images. Throws DomainError unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  int operator[](std::size_t i) const { return images_[i]; }
  std::span<const int> images() const { return images_; }
  /// Images shifted to {1, ..., n}.
  std::vector<int> one_based() const;

  /// +1 for even permutations, -1 for odd ones.
  int parity() const { return parity_; }
  bool is_identity() const;

  /// apply(compose(a, b), x) == apply(a, apply(b, x)).
  friend Permutation compose(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
  int parity_ = 1;
};

/// (w x)_i = x_{w(i)}. Throws DimensionError on length mismatch.
template <class Tag, class T>
Tuple<Tag, T> apply(const Permutation& w, const Tuple<Tag, T>& x) {
  if (w.size() != x.size()) {
    throw DimensionError("permutation of degree " + std::to_string(w.size()) +
                         " applied to a tuple of length " +
                         std::to_string(x.size()));
  }
  std::vector<T> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[w[i]];
  return Tuple<Tag, T>(std::move(out));
}

/// All even permutations of {0, ..., n-1}, stored contiguously in
/// lexicographic order of their image arrays.
class EvenPermutationTable {
 public:
  explicit EvenPermutationTable(int n);

  int degree() const { return n_; }
  std::size_t size() const { return count_; }

  /// Image array of the i-th element.
  std::span<const std::uint8_t> images(std::size_t i) const {
    return {flat_.data() + i * n_, static_cast<std::size_t>(n_)};
  }
  Permutation operator[](std::size_t i) const;
  std::vector<Permutation> elements() const;
  bool contains(const Permutation& w) const;

 private:
  int n_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> flat_;
};

/// Enumerates A_n. Throws SizeLimitError for n < 1 or n > kMaxGroupDegree.
EvenPermutationTable enumerate_alternating_group(int n);

/// Shared table, built on first use and kept for the process lifetime.
/// Safe to call concurrently.
const EvenPermutationTable& alternating_group(int n);

/// |A_n| = max(1, n!/2).
std::size_t alternating_group_order(int n);

/// Literal semidominance: v_1, v_2 >= v_3 >= ... >= v_n.
template <class T>
bool is_semidominant(std::span<const T> v) {
  const std::size_t n = v.size();
  if (n >= 3 && (v[0] < v[2] || v[1] < v[2])) return false;
  for (std::size_t i = 3; i < n; ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

/// True when some value occurs at least twice.
template <class T>
bool has_repeated_entry(std::span<const T> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return true;
  return false;
}

/// Semidominant and the unique representative of its A_n-orbit. With a
/// repeated entry the orbit is a full S_n-orbit and contains both
/// (a, b, ...) and (b, a, ...); the one with v_1 >= v_2 is kept.
template <class T>
bool is_canonical(std::span<const T> v) {
  if (!is_semidominant(v)) return false;
  return v.size() < 2 || v[0] >= v[1] || !has_repeated_entry(v);
}

/// v_1, v_2 > v_3 > ... > v_n and v_1 != v_2.
template <class T>
bool is_strictly_semidominant(std::span<const T> v) {
  const std::size_t n = v.size();
  if (n >= 2 && v[0] == v[1]) return false;
  if (n >= 3 && (v[0] <= v[2] || v[1] <= v[2])) return false;
  for (std::size_t i = 3; i < n; ++i)
    if (v[i - 1] <= v[i]) return false;
  return true;
}

template <class Tag, class T>
bool is_semidominant(const Tuple<Tag, T>& v) { return is_semidominant(v.values()); }
template <class Tag, class T>
bool is_canonical(const Tuple<Tag, T>& v) { return is_canonical(v.values()); }
template <class Tag, class T>
bool is_strictly_semidominant(const Tuple<Tag, T>& v) {
  return is_strictly_semidominant(v.values());
}

/// |G_v|: number of even permutations fixing v. Closed form from the
/// multiplicities k_j of the distinct values: prod k_j! halved when some
/// k_j > 1.
std::size_t stabilizer_order(std::span<const double> v);
std::size_t stabilizer_order(std::span<const int> v);
inline std::size_t stabilizer_order(const Weight& v) { return stabilizer_order(v.values()); }
inline std::size_t stabilizer_order(const IntegerWeight& v) {
  return stabilizer_order(v.values());
}

/// Brute-force |G_v| by scanning the table.
std::size_t count_stabilizer(const EvenPermutationTable& group, std::span<const double> v);

struct Normalized {
  Weight weight;
  Permutation permutation;
};

/// Returns w in A_n with apply(w, λ) semidominant. The image tuple is the
/// lexicographically greatest reachable one; among permutations producing
/// it, the lexicographically smallest image array is chosen.
Normalized semidominant_normalize(const Weight& lambda);

/// Open domain x_1, x_2 > x_3 > ... > x_n.
bool in_fundamental_domain(const Point& x);
/// Open domain 1 > x_1, x_2 > x_3 > ... > x_n > 0.
bool in_affine_fundamental_domain(const Point& x);
/// Closure 1 >= x_1, x_2 >= x_3 >= ... >= x_n >= 0.
bool in_closed_affine_domain(const Point& x);

struct AffineReduction {
  Point reduced;
  Permutation permutation;
  std::vector<long> shift;
};

/// Writes x = apply(w, x0) + r with x0 in the closed affine fundamental
/// domain and r integral.
AffineReduction affine_reduce(const Point& x);

/// apply(w, x0) + r.
Point affine_apply(const Permutation& w, const Point& x0, std::span<const long> shift);

/// Integer tuples with entries in [lo, hi] that are canonical orbit
/// representatives, in lexicographic order.
std::vector<IntegerWeight> canonical_integer_weights(int n, int lo, int hi);

}  // namespace altexp
