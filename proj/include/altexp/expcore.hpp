#pragma once

#include <complex>
#include <span>
#include <vector>

#include "altexp/matrix.hpp"
#include "altexp/types.hpp"

namespace altexp {

/// The matrix (exp(2πi λ_i x_j))_{i,j}. Throws DimensionError on mismatch.
ComplexMatrix exponential_matrix(const Weight& lambda, const Point& x);

/// E_λ(x) = sdet exp(2πi λ_i x_j) = Σ_{w ∈ A_n} exp(2πi <λ, w x>).
EvalResult eval_E_with(const Weight& lambda, const Point& x,
                       SdetStrategy strategy = SdetStrategy::automatic);
Complex eval_E(const Weight& lambda, const Point& x);
Complex eval_E(const IntegerWeight& m, const Point& x);

/// E⁺_λ(x): permanent of the exponential matrix.
Complex eval_E_plus(const Weight& lambda, const Point& x);
/// E⁻_λ(x): determinant of the exponential matrix.
Complex eval_E_minus(const Weight& lambda, const Point& x);

/// λ with its first two entries exchanged.
Weight swap_first_two(const Weight& lambda);

/// Residual magnitudes of the identities tying E, E⁺ and E⁻ together.
struct RelationResiduals {
  double minus_relation;    // E⁻_λ − (E_λ − E_{r12 λ})
  double plus_relation;     // E⁺_λ − (E_λ + E_{r12 λ})
  double product_identity;  // (E⁺)² − (E⁻)² − 4 E_λ E_{r12 λ}
  double sum_identity;      // (E⁺)² + (E⁻)² − 2 E_λ² − 2 E_{r12 λ}²

  double max() const;
};

/// Requires a strictly semidominant λ; throws DomainError otherwise.
RelationResiduals relation_check(const Weight& lambda, const Point& x);

/// |E_λ(x + a·1) − exp(2πi |λ| a) E_λ(x)|, |λ| = Σ λ_i.
double translate_identity(const Weight& lambda, const Point& x, double a);

/// |E_{λ+ν·1}(x) − E_λ(x)| for x on the hyperplane Σ x_i = 0. Throws
/// DomainError when |Σ x_i| > 1e-12.
double hyperplane_shift_identity(const Weight& lambda, const Point& x, double nu);

enum class ConjugationFlag { plain, r12_swapped };

struct ConjugationPartner {
  Weight weight;
  ConjugationFlag flag;
};

/// μ with E_λ(x) = conj(E_μ(x)) for all real x: the reversed, negated λ,
/// with its first two entries swapped when n ≡ 2, 3 (mod 4).
ConjugationPartner conjugation_partner(const Weight& lambda);

struct LaplaceSpectrum {
  /// k-th entry (k = 1..n): (−4π²)^k σ_k(λ_1², ..., λ_n²).
  std::vector<double> eigenvalues;
};

LaplaceSpectrum laplace_spectrum(const Weight& lambda);

/// σ_0..σ_n of the given values, from the coefficients of Π (t + y_i).
std::vector<double> elementary_symmetric(std::span<const double> values);

}  // namespace altexp
