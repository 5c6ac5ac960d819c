#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace altexp {

/// A fixed-length tuple of coordinates. The tag keeps weights and points
/// from being mixed up; `values()` gives a view when a routine is agnostic.
template <class Tag, class T>
class Tuple {
 public:
  using value_type = T;

  Tuple() = default;
  explicit Tuple(std::vector<T> values) : values_(std::move(values)) {}
  Tuple(std::initializer_list<T> values) : values_(values) {}

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  T operator[](std::size_t i) const { return values_[i]; }
  T& operator[](std::size_t i) { return values_[i]; }

  std::span<const T> values() const { return values_; }
  const std::vector<T>& vector() const { return values_; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;

 private:
  std::vector<T> values_;
};

struct WeightTag {};
struct PointTag {};

/// Real weight λ indexing a basis function.
using Weight = Tuple<WeightTag, double>;
/// Integer weight m.
using IntegerWeight = Tuple<WeightTag, int>;
/// Point x of R^n.
using Point = Tuple<PointTag, double>;

inline Weight to_real(const IntegerWeight& m) {
  return Weight(std::vector<double>(m.begin(), m.end()));
}

template <class Tag, class T>
std::string to_string(const Tuple<Tag, T>& t) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < t.size(); ++i) out << (i ? ", " : "") << t[i];
  out << ')';
  return out.str();
}

}  // namespace altexp
