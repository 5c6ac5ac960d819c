#include "altexp/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <random>

#include "altexp/altgroup.hpp"
#include "altexp/errors.hpp"
#include "altexp/expcore.hpp"

namespace altexp {

namespace {

std::vector<Point> tensor_nodes(int n, const Rule1D& rule, std::vector<double>& weights) {
  const std::size_t m = rule.nodes.size();
  const std::size_t total = tensor_size(n, static_cast<int>(m));
  std::vector<Point> nodes;
  nodes.reserve(total);
  weights.assign(total, 1.0);
  std::vector<std::size_t> index(n, 0);
  std::vector<double> coords(n);
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (int i = 0; i < n; ++i) {
      coords[i] = rule.nodes[index[i]];
      weights[flat] *= rule.weights[index[i]];
    }
    nodes.emplace_back(coords);
    for (int i = n - 1; i >= 0; --i) {
      if (++index[i] < m) break;
      index[i] = 0;
    }
  }
  return nodes;
}

void require_torus(const QuadratureSpec& q) {
  if (q.domain == QuadratureDomain::box) {
    throw DomainError("series transforms integrate over the torus, not a box");
  }
}

void require_box(const QuadratureSpec& q) {
  if (q.domain != QuadratureDomain::box) {
    throw DomainError("integral transforms need a box quadrature");
  }
}

Weight normalized_or_warn(const Weight& lambda, const char* what) {
  if (is_semidominant(lambda)) return lambda;
  std::clog << "altexp: " << what << ' ' << to_string(lambda)
            << " is not semidominant; using its normalized form\n";
  return semidominant_normalize(lambda).weight;
}

Complex box_transform(const ComplexFunction& f, const Weight& lambda, const Point& x_fixed,
                      bool inverse, const QuadratureSpec& q) {
  const int n = static_cast<int>(inverse ? x_fixed.size() : lambda.size());
  std::vector<double> weights;
  const auto nodes = tensor_nodes(n, axis_rule(q), weights);
  Complex total = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (inverse) {
      total += weights[k] * f(nodes[k]) * std::conj(eval_E(Weight(nodes[k].vector()), x_fixed));
    } else {
      total += weights[k] * f(nodes[k]) * eval_E(lambda, nodes[k]);
    }
  }
  return total / static_cast<double>(alternating_group_order(n));
}

}  // namespace

SymmetricFunction::SymmetricFunction(int n, ComplexFunction f, std::uint64_t seed)
    : n_(n), f_(std::move(f)) {
  if (n < 1) throw DomainError("dimension must be positive");
  if (!f_) throw DomainError("empty callable");
  constexpr int kProbes = 6;
  constexpr double kTolerance = 1e-8;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  const auto& group = alternating_group(n);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  for (int probe = 0; probe < kProbes; ++probe) {
    std::vector<double> x(n);
    for (double& v : x) v = coord(rng);
    const Point p(x);
    const Complex base = f_(p);
    for (int trial = 0; trial < 4; ++trial) {
      const Point moved = apply(group[pick(rng)], p);
      if (std::abs(f_(moved) - base) > kTolerance * std::max(1.0, std::abs(base))) {
        throw DomainError("function is not A_n-symmetric at " + to_string(p));
      }
    }
  }
}

Complex series_coefficient(const SymmetricFunction& f, const IntegerWeight& m,
                           const QuadratureSpec& quadrature) {
  require_torus(quadrature);
  if (static_cast<int>(m.size()) != f.dimension()) {
    throw DimensionError("weight length differs from function dimension");
  }
  if (!is_semidominant(m)) {
    throw DomainError("series coefficient needs a semidominant weight, got " + to_string(m));
  }
  QuadratureSpec torus = quadrature;
  torus.domain = QuadratureDomain::torus;
  const Weight lambda = to_real(m);
  const Complex integral = integrate(f.dimension(), torus, [&](const Point& x) {
    return f(x) * std::conj(eval_E(lambda, x));
  });
  const double scale = static_cast<double>(stabilizer_order(m)) *
                       static_cast<double>(alternating_group_order(f.dimension()));
  return integral / scale;
}

SeriesCoefficients series_coefficients(const SymmetricFunction& f, int cutoff,
                                       const QuadratureSpec& quadrature) {
  require_torus(quadrature);
  if (cutoff < 0) throw DomainError("cutoff must be non-negative");
  const int n = f.dimension();
  std::vector<double> weights;
  const auto nodes = tensor_nodes(n, axis_rule(quadrature), weights);
  std::vector<Complex> samples(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) samples[k] = weights[k] * f(nodes[k]);

  SeriesCoefficients out{n, {}};
  const double order = static_cast<double>(alternating_group_order(n));
  for (const auto& m : canonical_integer_weights(n, -cutoff, cutoff)) {
    const Weight lambda = to_real(m);
    Complex total = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      total += samples[k] * std::conj(eval_E(lambda, nodes[k]));
    out.values[m.vector()] = total / (order * static_cast<double>(stabilizer_order(m)));
  }
  return out;
}

Complex series_partial_sum(const SeriesCoefficients& coefficients, const Point& x) {
  if (static_cast<int>(x.size()) != coefficients.n) {
    throw DimensionError("point dimension differs from coefficient dimension");
  }
  Complex total = 0.0;
  for (const auto& [key, value] : coefficients.values) total += value * eval_E(IntegerWeight(key), x);
  return total;
}

double PlancherelReport::residual() const { return std::abs(coefficient_side - integral_side); }

PlancherelReport plancherel_residual(const SymmetricFunction& f, int cutoff,
                                     const QuadratureSpec& quadrature) {
  const auto coefficients = series_coefficients(f, cutoff, quadrature);
  double lhs = 0.0;
  for (const auto& [key, value] : coefficients.values) {
    lhs += static_cast<double>(stabilizer_order(std::span<const int>(key))) * std::norm(value);
  }
  QuadratureSpec domain = quadrature;
  domain.domain = QuadratureDomain::fundamental_affine;
  const double rhs =
      integrate(f.dimension(), domain, [&](const Point& x) { return Complex(std::norm(f(x))); })
          .real();
  return {lhs, rhs};
}

Complex alt_fourier_forward(const ComplexFunction& f, const Weight& lambda,
                            const QuadratureSpec& quadrature) {
  require_box(quadrature);
  return box_transform(f, normalized_or_warn(lambda, "weight"), Point(), false, quadrature);
}

Complex alt_fourier_inverse(const ComplexFunction& transformed, const Point& x,
                            const QuadratureSpec& quadrature) {
  require_box(quadrature);
  const Weight as_weight(x.vector());
  const Point reduced(normalized_or_warn(as_weight, "point").vector());
  return box_transform(transformed, Weight(), reduced, true, quadrature);
}

GridTransform::GridTransform(int n, const QuadratureSpec& quadrature) : n_(n) {
  require_box(quadrature);
  if (n < 1) throw DomainError("dimension must be positive");
  rule_ = axis_rule(quadrature);
  m_ = rule_.nodes.size();
  size_ = tensor_size(n, static_cast<int>(m_));
}

Point GridTransform::node(std::size_t flat) const {
  std::vector<double> coords(n_);
  for (int i = n_ - 1; i >= 0; --i) {
    coords[i] = rule_.nodes[flat % m_];
    flat /= m_;
  }
  return Point(std::move(coords));
}

std::vector<Complex> GridTransform::sample(const ComplexFunction& f) const {
  std::vector<Complex> out(size_);
  for (std::size_t k = 0; k < size_; ++k) out[k] = f(node(k));
  return out;
}

std::vector<Complex> GridTransform::forward(std::span<const Complex> values) const {
  return apply(values, 1.0);
}

std::vector<Complex> GridTransform::inverse(std::span<const Complex> values) const {
  return apply(values, -1.0);
}

std::vector<Complex> GridTransform::apply(std::span<const Complex> values, double sign) const {
  if (values.size() != size_) throw DimensionError("value count differs from grid size");
  // kernel[p * m + q] = w_q exp(± 2πi t_p t_q)
  std::vector<Complex> kernel(m_ * m_);
  for (std::size_t p = 0; p < m_; ++p)
    for (std::size_t q = 0; q < m_; ++q)
      kernel[p * m_ + q] =
          rule_.weights[q] *
          std::polar(1.0, sign * 2.0 * std::numbers::pi * rule_.nodes[p] * rule_.nodes[q]);

  std::vector<Complex> current(values.begin(), values.end());
  std::vector<Complex> next(size_);
  std::size_t stride = size_;
  for (int axis = 0; axis < n_; ++axis) {
    stride /= m_;
    const std::size_t block = stride * m_;
    for (std::size_t outer = 0; outer < size_; outer += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        const std::size_t base = outer + inner;
        for (std::size_t p = 0; p < m_; ++p) {
          Complex total = 0.0;
          for (std::size_t q = 0; q < m_; ++q) total += kernel[p * m_ + q] * current[base + q * stride];
          next[base + p * stride] = total;
        }
      }
    }
    current.swap(next);
  }

  const auto& group = alternating_group(n_);
  if (group.size() == 1) return current;
  std::vector<Complex> out(size_, 0.0);
  std::vector<std::size_t> index(n_);
  for (std::size_t flat = 0; flat < size_; ++flat) {
    std::size_t rest = flat;
    for (int i = n_ - 1; i >= 0; --i) {
      index[i] = rest % m_;
      rest /= m_;
    }
    Complex total = 0.0;
    for (std::size_t k = 0; k < group.size(); ++k) {
      const auto w = group.images(k);
      std::size_t permuted = 0;
      for (int i = 0; i < n_; ++i) permuted = permuted * m_ + index[w[i]];
      total += current[permuted];
    }
    out[flat] = total / static_cast<double>(group.size());
  }
  return out;
}

double fundamental_domain_volume(int n, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw DomainError("need at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<double> x(n);
  std::size_t inside = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (double& v : x) v = coord(rng);
    if (in_affine_fundamental_domain(Point(x))) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(samples);
}

}  // namespace altexp
