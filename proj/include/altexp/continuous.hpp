#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "altexp/matrix.hpp"
#include "altexp/quadrature.hpp"
#include "altexp/types.hpp"

namespace altexp {

using ComplexFunction = std::function<Complex(const Point&)>;

/// A callable declared A_n-symmetric. Construction samples a few seeded
/// points in [-1, 1]^n and checks f(w x) = f(x) to a relative 1e-8.
/// The callable may be invoked concurrently and must tolerate that.
class SymmetricFunction {
 public:
  SymmetricFunction(int n, ComplexFunction f, std::uint64_t seed = 0);

  int dimension() const { return n_; }
  Complex operator()(const Point& x) const { return f_(x); }
  const ComplexFunction& callable() const { return f_; }

 private:
  int n_;
  ComplexFunction f_;
};

/// Coefficients c_m of a Fourier series in E_m, keyed by integer weights.
struct SeriesCoefficients {
  int n = 0;
  std::map<std::vector<int>, Complex> values;
};

/// c_m = |G_m|^{-1} |A_n|^{-1} ∫_torus f conj(E_m). `quadrature` must be a
/// torus or fundamental_affine spec. Throws DomainError for non-semidominant m.
Complex series_coefficient(const SymmetricFunction& f, const IntegerWeight& m,
                           const QuadratureSpec& quadrature);

/// c_m for every canonical m with max |m_i| <= cutoff.
SeriesCoefficients series_coefficients(const SymmetricFunction& f, int cutoff,
                                       const QuadratureSpec& quadrature);

/// Σ_m c_m E_m(x).
Complex series_partial_sum(const SeriesCoefficients& coefficients, const Point& x);

struct PlancherelReport {
  double coefficient_side;  // Σ_m |G_m| |c_m|²
  double integral_side;     // ∫ over the closed fundamental domain of |f|²
  double residual() const;
};

PlancherelReport plancherel_residual(const SymmetricFunction& f, int cutoff,
                                     const QuadratureSpec& quadrature);

/// f̃(λ) = ∫_{D^e_+} f E_λ = |A_n|^{-1} ∫_box f(x) E_λ(x) dx for symmetric f.
/// A non-semidominant λ is normalized first, with a warning on std::clog.
Complex alt_fourier_forward(const ComplexFunction& f, const Weight& lambda,
                            const QuadratureSpec& quadrature);

/// f(x) = ∫_{D^e_+} f̃ conj(E_λ(x)) dλ, realized like the forward transform.
Complex alt_fourier_inverse(const ComplexFunction& transformed, const Point& x,
                            const QuadratureSpec& quadrature);

/// The alternating Fourier transform as an operator on values sampled at
/// the nodes of a square tensor box rule. The one-dimensional kernel is
/// applied axis by axis, then the result is averaged over A_n.
class GridTransform {
 public:
  GridTransform(int n, const QuadratureSpec& quadrature);

  int dimension() const { return n_; }
  std::size_t size() const { return size_; }
  Point node(std::size_t flat) const;
  std::vector<Complex> sample(const ComplexFunction& f) const;

  std::vector<Complex> forward(std::span<const Complex> values) const;
  std::vector<Complex> inverse(std::span<const Complex> values) const;

 private:
  std::vector<Complex> apply(std::span<const Complex> values, double sign) const;

  int n_;
  std::size_t m_;
  std::size_t size_;
  Rule1D rule_;
};

/// Fraction of `samples` uniform points of [0,1)^n inside the open affine
/// fundamental domain (seeded).
double fundamental_domain_volume(int n, std::size_t samples, std::uint64_t seed);

}  // namespace altexp
