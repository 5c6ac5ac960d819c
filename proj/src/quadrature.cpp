#include "altexp/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <memory>
#include <string>

#include "altexp/altgroup.hpp"
#include "altexp/errors.hpp"

namespace altexp {

Rule1D midpoint_rule(int m, double a, double b) {
  if (m < 1) throw DomainError("midpoint rule needs at least one cell");
  Rule1D rule;
  const double h = (b - a) / m;
  for (int j = 0; j < m; ++j) {
    rule.nodes.push_back(a + (j + 0.5) * h);
    rule.weights.push_back(h);
  }
  return rule;
}

Rule1D gauss_legendre_rule(int m, double a, double b) {
  if (m < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(m)),
            &gsl_integration_glfixed_table_free);
  if (!table) throw Error("could not build Gauss-Legendre table");
  Rule1D rule;
  for (int j = 0; j < m; ++j) {
    double node = 0.0, weight = 0.0;
    gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(j), &node, &weight,
                                  table.get());
    rule.nodes.push_back(node);
    rule.weights.push_back(weight);
  }
  return rule;
}

Rule1D axis_rule(const QuadratureSpec& spec) {
  if (spec.resolution < 2) throw DomainError("quadrature resolution must be at least 2");
  double a = 0.0, b = 1.0;
  if (spec.domain == QuadratureDomain::box) {
    if (!(spec.half_width > 0.0)) throw DomainError("box half-width must be positive");
    a = -spec.half_width;
    b = spec.half_width;
  }
  return spec.scheme == QuadratureScheme::midpoint_tensor
             ? midpoint_rule(spec.resolution, a, b)
             : gauss_legendre_rule(spec.resolution, a, b);
}

std::size_t tensor_size(int n, int resolution) {
  constexpr std::size_t kLimit = std::size_t{1} << 26;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(resolution);
    if (total > kLimit) {
      throw SizeLimitError("tensor quadrature with " + std::to_string(resolution) + "^" +
                           std::to_string(n) + " nodes exceeds the node budget");
    }
  }
  return total;
}

std::complex<double> integrate(int n, const QuadratureSpec& spec,
                               const std::function<std::complex<double>(const Point&)>& f) {
  if (n < 1) throw DomainError("dimension must be positive");
  const Rule1D rule = axis_rule(spec);
  const std::size_t total = tensor_size(n, spec.resolution);
  const auto m = static_cast<std::size_t>(spec.resolution);

  std::vector<std::size_t> index(n, 0);
  std::vector<double> coords(n);
  std::complex<double> sum = 0.0;
  for (std::size_t flat = 0; flat < total; ++flat) {
    double weight = 1.0;
    for (int i = 0; i < n; ++i) {
      coords[i] = rule.nodes[index[i]];
      weight *= rule.weights[index[i]];
    }
    sum += weight * f(Point(coords));
    for (int i = n - 1; i >= 0; --i) {
      if (++index[i] < m) break;
      index[i] = 0;
    }
  }
  if (spec.domain == QuadratureDomain::fundamental_affine) {
    sum /= static_cast<double>(alternating_group_order(n));
  }
  return sum;
}

}  // namespace altexp
