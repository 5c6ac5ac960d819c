#include "altexp/finite_transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <type_traits>

#include "altexp/altgroup.hpp"
#include "altexp/errors.hpp"
#include "altexp/expcore.hpp"

namespace altexp {

namespace {

std::string key_string(const std::vector<int>& key) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < key.size(); ++i) out << (i ? "," : "") << key[i];
  out << ')';
  return out.str();
}

void require_weight_in_range(const IntegerWeight& m, int n, int N) {
  if (static_cast<int>(m.size()) != n) {
    throw DimensionError("weight " + to_string(m) + " does not have " + std::to_string(n) +
                         " entries");
  }
  for (int v : m) {
    if (v < 1 || v > N) {
      throw DomainError("weight " + to_string(m) + " has entries outside 1.." +
                        std::to_string(N));
    }
  }
}

// N^{-1/2} exp(2πi r / N) for an integer phase numerator r.
Complex root_of_unity(long r, int N) {
  const long reduced = ((r % N) + N) % N;
  return std::polar(1.0 / std::sqrt(static_cast<double>(N)),
                    2.0 * std::numbers::pi * static_cast<double>(reduced) / N);
}

// Dense table of Ẽ_m(s) for all index weights (rows) and grid points (columns).
std::vector<Complex> basis_table(const GridSpec& grid) {
  const auto& weights = grid.index_set();
  const auto& points = grid.semidominant_points();
  std::vector<Complex> table(weights.size() * points.size());
  for (std::size_t a = 0; a < weights.size(); ++a)
    for (std::size_t b = 0; b < points.size(); ++b)
      table[a * points.size() + b] = eval_discrete_E(weights[a], points[b], grid);
  return table;
}

}  // namespace

template <class Tag>
Complex KeyedValues<Tag>::at(const std::vector<int>& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw DomainError("no value for key " + key_string(key));
  return it->second;
}

template class KeyedValues<SampleTag>;
template class KeyedValues<CoefficientTag>;

GridSpec::GridSpec(int n, int N) : n_(n), N_(N) {
  if (n < 1) throw DomainError("grid dimension must be positive");
  if (N < 1) throw DomainError("grid density N must be positive");
  group_order_ = alternating_group_order(n);
  full_size_ = 1;
  for (int i = 0; i < n; ++i) {
    full_size_ *= static_cast<std::size_t>(N);
    if (full_size_ > kMaxGridPoints) {
      throw SizeLimitError("grid N^n exceeds " + std::to_string(kMaxGridPoints) + " points");
    }
  }
  weights_ = canonical_integer_weights(n, 1, N);
  points_.reserve(weights_.size());
  stabilizers_.reserve(weights_.size());
  for (const auto& m : weights_) {
    points_.push_back(m.vector());
    stabilizers_.push_back(stabilizer_order(m));
  }
}

Point GridSpec::point(const GridIndex& k) const {
  if (static_cast<int>(k.size()) != n_) throw DimensionError("grid index has wrong length");
  std::vector<double> s(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) s[i] = static_cast<double>(k[i]) / N_;
  return Point(std::move(s));
}

bool GridSpec::contains(const GridIndex& k) const {
  return std::binary_search(points_.begin(), points_.end(), k);
}

int GridSpec::snap(double s) const {
  const double scaled = s * N_;
  const double k = std::round(scaled);
  if (std::abs(s - k / N_) > 1e-12 || k < 1 || k > N_) {
    throw DomainError("value " + std::to_string(s) + " is not a point of F_" +
                      std::to_string(N_));
  }
  return static_cast<int>(k);
}

Complex discrete_exponential(int m, double s, int N) {
  if (N < 1) throw DomainError("N must be positive");
  if (m < 1 || m > N) {
    throw DomainError("frequency " + std::to_string(m) + " outside 1.." + std::to_string(N));
  }
  const GridSpec line(1, N);
  return root_of_unity(static_cast<long>(m) * line.snap(s), N);
}

Complex eval_discrete_E(const IntegerWeight& m, const GridIndex& k, const GridSpec& grid) {
  const int n = grid.dimension();
  const int N = grid.density();
  require_weight_in_range(m, n, N);
  if (static_cast<int>(k.size()) != n) throw DimensionError("grid index has wrong length");
  for (int v : k) {
    if (v < 1 || v > N) throw DomainError("grid index " + key_string(k) + " is off the grid");
  }
  ComplexMatrix e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e(i, j) = root_of_unity(static_cast<long>(m[i]) * k[j], N);
  return sdet(e).value / std::sqrt(static_cast<double>(grid.group_order()));
}

Complex eval_discrete_E(const IntegerWeight& m, const Point& x, int N) {
  const int n = static_cast<int>(m.size());
  const double scale = 1.0 / std::sqrt(static_cast<double>(alternating_group_order(n)) *
                                       std::pow(static_cast<double>(N), n));
  return scale * eval_E(m, x);
}

Complex weighted_inner_product(const SampleField& f, const SampleField& g,
                               const GridSpec& grid) {
  check_keys(f, grid);
  check_keys(g, grid);
  const auto& points = grid.semidominant_points();
  Complex total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    total += f.at(points[i]) * std::conj(g.at(points[i])) /
             static_cast<double>(grid.stabilizer(i));
  }
  return static_cast<double>(grid.group_order()) * total;
}

CoefficientMap forward(const SampleField& f, const GridSpec& grid) {
  check_keys(f, grid);
  const auto& weights = grid.index_set();
  const auto& points = grid.semidominant_points();
  const auto table = basis_table(grid);
  std::vector<Complex> samples(points.size());
  for (std::size_t b = 0; b < points.size(); ++b) {
    samples[b] = f.at(points[b]) / static_cast<double>(grid.stabilizer(b));
  }
  CoefficientMap out(grid.dimension(), grid.density());
  const double order = static_cast<double>(grid.group_order());
  for (std::size_t a = 0; a < weights.size(); ++a) {
    Complex total = 0.0;
    for (std::size_t b = 0; b < points.size(); ++b)
      total += samples[b] * std::conj(table[a * points.size() + b]);
    out.set(weights[a].vector(),
            order / static_cast<double>(stabilizer_order(weights[a])) * total);
  }
  return out;
}

SampleField inverse(const CoefficientMap& a, const GridSpec& grid) {
  check_keys(a, grid);
  const auto& weights = grid.index_set();
  const auto& points = grid.semidominant_points();
  const auto table = basis_table(grid);
  std::vector<Complex> coefficients(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) coefficients[i] = a.at(weights[i].vector());
  SampleField out(grid.dimension(), grid.density());
  for (std::size_t b = 0; b < points.size(); ++b) {
    Complex total = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i)
      total += coefficients[i] * table[i * points.size() + b];
    out.set(points[b], total);
  }
  return out;
}

Complex interpolate(const CoefficientMap& a, const Point& x) {
  if (static_cast<int>(x.size()) != a.dimension()) {
    throw DimensionError("point dimension differs from coefficient dimension");
  }
  const Point reduced = in_closed_affine_domain(x) ? x : affine_reduce(x).reduced;
  Complex total = 0.0;
  for (const auto& [key, value] : a.values()) {
    total += value * eval_discrete_E(IntegerWeight(key), reduced, a.density());
  }
  return total;
}

SampleField sample(const GridSpec& grid, const std::function<Complex(const Point&)>& f) {
  SampleField out(grid.dimension(), grid.density());
  for (const auto& k : grid.semidominant_points()) out.set(k, f(grid.point(k)));
  return out;
}

SampleField basis_samples(const IntegerWeight& m, const GridSpec& grid) {
  SampleField out(grid.dimension(), grid.density());
  for (const auto& k : grid.semidominant_points()) out.set(k, eval_discrete_E(m, k, grid));
  return out;
}

template <class Tag>
void check_keys(const KeyedValues<Tag>& values, const GridSpec& grid) {
  if (values.dimension() != grid.dimension() || values.density() != grid.density()) {
    throw DimensionError("data has n=" + std::to_string(values.dimension()) +
                         ", N=" + std::to_string(values.density()) + " but grid has n=" +
                         std::to_string(grid.dimension()) + ", N=" +
                         std::to_string(grid.density()));
  }
  constexpr std::size_t kListed = 8;
  std::vector<std::string> missing;
  std::size_t missing_count = 0;
  for (const auto& k : grid.semidominant_points()) {
    if (!values.contains(k)) {
      if (missing.size() < kListed) missing.push_back(key_string(k));
      ++missing_count;
    }
  }
  std::vector<std::string> foreign;
  std::size_t foreign_count = 0;
  for (const auto& [key, value] : values.values()) {
    if (!grid.contains(key)) {
      if (foreign.size() < kListed) foreign.push_back(key_string(key));
      ++foreign_count;
    }
  }
  if (missing_count == 0 && foreign_count == 0) return;
  std::string message;
  const auto append = [&](const char* what, const std::vector<std::string>& keys,
                          std::size_t count) {
    if (count == 0) return;
    if (!message.empty()) message += "; ";
    message += std::to_string(count) + " " + what + ":";
    for (const auto& k : keys) message += " " + k;
    if (count > keys.size()) message += " ...";
  };
  append("missing keys", missing, missing_count);
  append("keys off the canonical grid", foreign, foreign_count);
  throw DomainError(message);
}

template void check_keys(const KeyedValues<SampleTag>&, const GridSpec&);
template void check_keys(const KeyedValues<CoefficientTag>&, const GridSpec&);

}  // namespace altexp
