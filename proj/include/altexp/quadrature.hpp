#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "altexp/types.hpp"

namespace altexp {

enum class QuadratureScheme { midpoint_tensor, gauss_legendre_tensor };
enum class QuadratureDomain { torus, fundamental_affine, box };

/// Tensor-product quadrature description.
///   torus:              [0,1)^n, weights sum to 1
///   fundamental_affine: torus rule scaled by 1/|A_n|; exact replacement for
///                       the integral over the closed fundamental domain when
///                       the integrand is A_n-symmetric
///   box:                [-half_width, half_width]^n
struct QuadratureSpec {
  int resolution = 64;
  QuadratureScheme scheme = QuadratureScheme::midpoint_tensor;
  QuadratureDomain domain = QuadratureDomain::torus;
  double half_width = 6.0;

  static QuadratureSpec torus(int resolution) {
    return {resolution, QuadratureScheme::midpoint_tensor, QuadratureDomain::torus, 6.0};
  }
  static QuadratureSpec box(double half_width, int resolution,
                            QuadratureScheme scheme = QuadratureScheme::gauss_legendre_tensor) {
    return {resolution, scheme, QuadratureDomain::box, half_width};
  }
};

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Midpoint rule on [a, b] with m cells.
Rule1D midpoint_rule(int m, double a, double b);
/// m-point Gauss–Legendre rule on [a, b].
Rule1D gauss_legendre_rule(int m, double a, double b);

/// One-dimensional rule for the spec's interval and scheme, before any
/// domain scaling. Throws DomainError when resolution < 2.
Rule1D axis_rule(const QuadratureSpec& spec);

/// Σ_nodes weight · f(node) over the n-dimensional tensor rule.
std::complex<double> integrate(int n, const QuadratureSpec& spec,
                               const std::function<std::complex<double>(const Point&)>& f);

/// Number of tensor nodes, resolution^n; throws SizeLimitError above 2^26.
std::size_t tensor_size(int n, int resolution);

}  // namespace altexp
