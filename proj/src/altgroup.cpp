#include "altexp/altgroup.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

namespace altexp {

namespace {

int parity_of(std::span<const int> images) {
  // Cycle decomposition: a cycle of length L contributes L-1 transpositions.
  std::vector<bool> seen(images.size(), false);
  int transpositions = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    std::size_t j = i;
    int length = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(images[j]);
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

template <class T>
std::size_t stabilizer_order_impl(std::span<const T> v) {
  std::vector<T> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t order = 1;
  bool repeated = false;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const int multiplicity = static_cast<int>(j - i);
    if (multiplicity > 1) repeated = true;
    order *= factorial(multiplicity);
    i = j;
  }
  return repeated ? order / 2 : order;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int image : images_) {
    if (image < 0 || static_cast<std::size_t>(image) >= images_.size() || hit[image]) {
      throw DomainError("image array is not a bijection of {0..n-1}");
    }
    hit[image] = true;
  }
  parity_ = parity_of(images_);
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(images_);
  for (int& v : out) ++v;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DimensionError("composing permutations of different degree");
  // (a (b x))_i = (b x)_{a(i)} = x_{b(a(i))}
  std::vector<int> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[i] = b[a[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) images[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(images));
}

EvenPermutationTable::EvenPermutationTable(int n) : n_(n) {
  if (n < 1 || n > kMaxGroupDegree) {
    throw SizeLimitError("alternating group degree must satisfy 1 <= n <= " +
                         std::to_string(kMaxGroupDegree) + " (table holds n!/2 entries), got " +
                         std::to_string(n));
  }
  const std::size_t expected = alternating_group_order(n);
  flat_.reserve(expected * static_cast<std::size_t>(n));
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  do {
    if (parity_of(images) > 0) {
      for (int v : images) flat_.push_back(static_cast<std::uint8_t>(v));
      ++count_;
    }
  } while (std::next_permutation(images.begin(), images.end()));
}

Permutation EvenPermutationTable::operator[](std::size_t i) const {
  const auto row = images(i);
  return Permutation(std::vector<int>(row.begin(), row.end()));
}

std::vector<Permutation> EvenPermutationTable::elements() const {
  std::vector<Permutation> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) out.push_back((*this)[i]);
  return out;
}

bool EvenPermutationTable::contains(const Permutation& w) const {
  if (w.size() != static_cast<std::size_t>(n_)) return false;
  std::vector<std::uint8_t> key(w.images().begin(), w.images().end());
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto row = images(mid);
    if (std::lexicographical_compare(row.begin(), row.end(), key.begin(), key.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < count_ && std::equal(key.begin(), key.end(), images(lo).begin());
}

EvenPermutationTable enumerate_alternating_group(int n) { return EvenPermutationTable(n); }

const EvenPermutationTable& alternating_group(int n) {
  constexpr int kCached = 10;
  static std::array<std::once_flag, kCached + 1> flags;
  static std::array<std::unique_ptr<const EvenPermutationTable>, kCached + 1> tables;
  if (n >= 1 && n <= kCached) {
    std::call_once(flags[n], [n] { tables[n] = std::make_unique<const EvenPermutationTable>(n); });
    return *tables[n];
  }
  // Large tables are kept once built; construction is serialized.
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const EvenPermutationTable>> large;
  std::lock_guard lock(mutex);
  auto& slot = large[n];
  if (!slot) slot = std::make_unique<const EvenPermutationTable>(n);
  return *slot;
}

std::size_t alternating_group_order(int n) {
  if (n < 1) throw SizeLimitError("alternating group degree must be positive");
  return n == 1 ? 1 : factorial(n) / 2;
}

std::size_t stabilizer_order(std::span<const double> v) { return stabilizer_order_impl(v); }
std::size_t stabilizer_order(std::span<const int> v) { return stabilizer_order_impl(v); }

std::size_t count_stabilizer(const EvenPermutationTable& group, std::span<const double> v) {
  if (static_cast<std::size_t>(group.degree()) != v.size()) {
    throw DimensionError("stabilizer count: tuple length differs from group degree");
  }
  std::size_t count = 0;
  for (std::size_t k = 0; k < group.size(); ++k) {
    const auto w = group.images(k);
    bool fixed = true;
    for (std::size_t i = 0; i < v.size() && fixed; ++i) fixed = v[w[i]] == v[i];
    if (fixed) ++count;
  }
  return count;
}

Normalized semidominant_normalize(const Weight& lambda) {
  const std::size_t n = lambda.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lambda[a] > lambda[b]; });
  if (parity_of(order) < 0) {
    // Restore evenness without leaving the coset: swap the last adjacent
    // pair of equal values if any, otherwise the two largest entries.
    std::size_t swap_at = n;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (lambda[order[i]] == lambda[order[i + 1]]) swap_at = i;
    if (swap_at == n) swap_at = 0;
    std::swap(order[swap_at], order[swap_at + 1]);
  }
  Permutation w(std::move(order));
  Weight image = apply(w, lambda);
  return {std::move(image), std::move(w)};
}

bool in_fundamental_domain(const Point& x) {
  const std::size_t n = x.size();
  if (n >= 3 && !(x[0] > x[2] && x[1] > x[2])) return false;
  for (std::size_t i = 3; i < n; ++i)
    if (!(x[i - 1] > x[i])) return false;
  return true;
}

bool in_affine_fundamental_domain(const Point& x) {
  const std::size_t n = x.size();
  if (n == 0) return false;
  if (!(x[0] < 1.0)) return false;
  if (n >= 2 && !(x[1] < 1.0)) return false;
  return in_fundamental_domain(x) && x[n - 1] > 0.0;
}

bool in_closed_affine_domain(const Point& x) {
  const std::size_t n = x.size();
  if (n == 0) return false;
  if (!(x[0] <= 1.0)) return false;
  if (n >= 2 && !(x[1] <= 1.0)) return false;
  return is_semidominant(x.values()) && x[n - 1] >= 0.0;
}

AffineReduction affine_reduce(const Point& x) {
  std::vector<double> fractional(x.size());
  std::vector<long> shift(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double whole = std::floor(x[i]);
    shift[i] = static_cast<long>(whole);
    fractional[i] = x[i] - whole;
  }
  auto normalized = semidominant_normalize(Weight(std::move(fractional)));
  return {Point(normalized.weight.vector()), normalized.permutation.inverse(), std::move(shift)};
}

Point affine_apply(const Permutation& w, const Point& x0, std::span<const long> shift) {
  if (shift.size() != x0.size()) throw DimensionError("shift length differs from point dimension");
  Point out = apply(w, x0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += static_cast<double>(shift[i]);
  return out;
}

std::vector<IntegerWeight> canonical_integer_weights(int n, int lo, int hi) {
  if (n < 1) throw DomainError("dimension must be positive");
  std::vector<IntegerWeight> out;
  if (hi < lo) return out;
  std::vector<int> current(n, lo);
  while (true) {
    if (is_canonical(std::span<const int>(current))) out.emplace_back(current);
    int i = n - 1;
    while (i >= 0 && current[i] == hi) current[i--] = lo;
    if (i < 0) break;
    ++current[i];
  }
  return out;
}

}  // namespace altexp
