#include "altexp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <set>

#include <json.hpp>

#include "altexp/altgroup.hpp"
#include "altexp/continuous.hpp"
#include "altexp/expcore.hpp"
#include "altexp/finite_transform.hpp"
#include "altexp/hermite.hpp"
#include "altexp/matrix.hpp"

namespace altexp {

namespace {

constexpr double kPi = std::numbers::pi;

class Suite {
 public:
  Suite(const VerifyConfig& config, VerifyReport& report)
      : config_(config), report_(report), rng_(config.seed) {}

  std::mt19937_64& rng() { return rng_; }
  const VerifyConfig& config() const { return config_; }

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

  Weight random_weight(int n, double a, double b) {
    std::vector<double> v(n);
    for (double& x : v) x = uniform(a, b);
    return Weight(std::move(v));
  }
  Point random_point(int n, double a, double b) {
    std::vector<double> v(n);
    for (double& x : v) x = uniform(a, b);
    return Point(std::move(v));
  }
  Weight random_strict_weight(int n) {
    std::vector<double> v(n);
    for (double& x : v) x = uniform(-3.0, 3.0);
    std::sort(v.begin(), v.end(), std::greater<>());
    return Weight(std::move(v));
  }
  Permutation random_even(int n) {
    const auto& group = alternating_group(n);
    return group[std::uniform_int_distribution<std::size_t>(0, group.size() - 1)(rng_)];
  }

  /// Runs `body`, which returns the worst residual; exceptions fail the check.
  void check(const std::string& name, double default_tolerance,
             const std::function<double(std::string&)>& body) {
    const double tolerance = config_.tolerance.value_or(default_tolerance);
    std::string detail;
    double residual = 0.0;
    bool passed = false;
    try {
      residual = body(detail);
      passed = std::isfinite(residual) && residual <= tolerance;
    } catch (const std::exception& e) {
      residual = std::numeric_limits<double>::infinity();
      detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back({name, residual, tolerance, passed, detail});
  }

 private:
  const VerifyConfig& config_;
  VerifyReport& report_;
  std::mt19937_64 rng_;
};

double relative(Complex a, Complex b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

void altgroup_checks(Suite& s) {
  s.check("altgroup.order_and_parity", 0.0, [&](std::string& detail) {
    double bad = 0;
    for (int n = 1; n <= 7; ++n) {
      const auto table = enumerate_alternating_group(n);
      std::size_t expected = 1;
      for (int k = 2; k <= n; ++k) expected *= k;
      if (n >= 2) expected /= 2;
      if (table.size() != expected) ++bad;
      for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i].parity() != 1) ++bad;
    }
    detail = "n = 1..7";
    return bad;
  });

  s.check("altgroup.closure_and_inverse", 0.0, [&](std::string& detail) {
    double bad = 0;
    for (int n = 2; n <= 6; ++n) {
      const auto& table = alternating_group(n);
      for (int t = 0; t < 100; ++t) {
        const auto a = s.random_even(n);
        const auto b = s.random_even(n);
        if (!table.contains(compose(a, b))) ++bad;
        if (!table.contains(a.inverse())) ++bad;
      }
    }
    detail = "100 random pairs per n = 2..6";
    return bad;
  });

  s.check("altgroup.stabilizer_formula", 0.0, [&](std::string& detail) {
    double bad = 0;
    for (int n = 3; n <= 5; ++n) {
      const auto& table = alternating_group(n);
      std::vector<double> v(n, 0.0);
      while (true) {
        if (stabilizer_order(std::span<const double>(v)) != count_stabilizer(table, v)) ++bad;
        int i = n - 1;
        while (i >= 0 && v[i] == 2.0) v[i--] = 0.0;
        if (i < 0) break;
        v[i] += 1.0;
      }
    }
    detail = "all entries in {0,1,2}^n, n = 3..5";
    return bad;
  });

  s.check("altgroup.normalize", 0.0, [&](std::string& detail) {
    double bad = 0;
    for (int t = 0; t < 300; ++t) {
      const int n = s.integer(1, 6);
      std::vector<double> v(n);
      for (double& x : v) x = t % 2 ? s.integer(0, 2) : s.uniform(-5.0, 5.0);
      const Weight lambda(v);
      const auto result = semidominant_normalize(lambda);
      if (!is_semidominant(result.weight)) ++bad;
      if (result.permutation.parity() != 1) ++bad;
      if (apply(result.permutation, lambda) != result.weight) ++bad;
    }
    detail = "300 random weights, half with repeated entries";
    return bad;
  });

  s.check("altgroup.affine_round_trip", 1e-12, [&](std::string& detail) {
    double worst = 0.0;
    for (int t = 0; t < 300; ++t) {
      const int n = s.integer(1, 6);
      const Point x = s.random_point(n, -4.0, 4.0);
      const auto r = affine_reduce(x);
      if (!in_closed_affine_domain(r.reduced)) return std::numeric_limits<double>::infinity();
      const Point back = affine_apply(r.permutation, r.reduced, r.shift);
      for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(back[i] - x[i]));
    }
    detail = "300 random points in [-4,4]^n, n = 1..6";
    return worst;
  });

  s.check("altgroup.orbit_size", 0.0, [&](std::string& detail) {
    double bad = 0;
    for (int n = 2; n <= 6; ++n) {
      const Point x = s.random_point(n, 0.0, 1.0);
      const auto& table = alternating_group(n);
      std::set<std::vector<double>> orbit;
      for (std::size_t k = 0; k < table.size(); ++k) orbit.insert(apply(table[k], x).vector());
      if (orbit.size() != alternating_group_order(n)) ++bad;
    }
    detail = "distinct coordinates, n = 2..6";
    return bad;
  });
}

void expcore_checks(Suite& s) {
  s.check("expcore.sdet_decomposition", 1e-10, [&](std::string& detail) {
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const int n = 2 + t % 6;
      ComplexMatrix m(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(s.uniform(-1, 1), s.uniform(-1, 1));
      const Complex naive = sdet(m, SdetStrategy::naive_enumeration).value;
      const Complex split = sdet(m, SdetStrategy::det_plus_permanent).value;
      worst = std::max(worst, relative(naive, split));
    }
    detail = "200 random complex matrices, n = 2..7, relative error";
    return worst;
  });

  const auto per_dimension = [&](const std::string& name, int trials,
                                 const std::function<double(int)>& trial) {
    s.check(name, 1e-10, [&](std::string& detail) {
      double worst = 0.0;
      for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < trials; ++t) worst = std::max(worst, trial(n));
      detail = std::to_string(trials) + " trials per n = 2..5";
      return worst;
    });
  };

  per_dimension("expcore.alternating_symmetry", 100, [&](int n) {
    const Weight lambda = s.random_weight(n, -3, 3);
    const Point x = s.random_point(n, -1, 1);
    const auto w = s.random_even(n);
    const Complex e = eval_E(lambda, x);
    return std::max(std::abs(eval_E(apply(w, lambda), x) - e), std::abs(eval_E(lambda, apply(w, x)) - e));
  });
  per_dimension("expcore.scaling", 100, [&](int n) {
    const Weight lambda = s.random_weight(n, -3, 3);
    const Point x = s.random_point(n, -1, 1);
    const double c = s.uniform(-2, 2);
    Weight scaled_lambda = lambda;
    Point scaled_x = x;
    for (int i = 0; i < n; ++i) {
      scaled_lambda[i] *= c;
      scaled_x[i] *= c;
    }
    return std::abs(eval_E(scaled_lambda, x) - eval_E(lambda, scaled_x));
  });
  per_dimension("expcore.duality", 100, [&](int n) {
    const Weight lambda = s.random_weight(n, -3, 3);
    const Point x = s.random_point(n, -1, 1);
    return std::abs(eval_E(lambda, x) - eval_E(Weight(x.vector()), Point(lambda.vector())));
  });
  per_dimension("expcore.translation", 100, [&](int n) {
    return translate_identity(s.random_weight(n, -3, 3), s.random_point(n, -1, 1),
                              s.uniform(-2, 2));
  });
  per_dimension("expcore.hyperplane_shift", 100, [&](int n) {
    Point x = s.random_point(n, -1, 1);
    double sum = 0.0;
    for (int i = 0; i + 1 < n; ++i) sum += x[i];
    x[n - 1] = -sum;
    return hyperplane_shift_identity(s.random_weight(n, -3, 3), x, s.uniform(-5, 5));
  });
  per_dimension("expcore.affine_symmetry", 100, [&](int n) {
    std::vector<int> m(n);
    for (int& v : m) v = s.integer(-4, 4);
    const IntegerWeight weight(m);
    const Point x = s.random_point(n, 0, 1);
    std::vector<long> shift(n);
    for (long& r : shift) r = s.integer(-3, 3);
    const Point moved = affine_apply(s.random_even(n), x, shift);
    return std::abs(eval_E(weight, moved) - eval_E(weight, x));
  });

  s.check("expcore.relations", 1e-10, [&](std::string& detail) {
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n)
      for (int t = 0; t < 50; ++t)
        worst = std::max(worst, relation_check(s.random_strict_weight(n), s.random_point(n, -1, 1)).max());
    detail = "strictly decreasing weights, n = 2..5";
    return worst;
  });

  // With a repeated entry r12 λ lies in the A_n-orbit of λ, so
  // E⁺ = E_λ + E_{r12 λ} = 2 E_λ. The stated E = E⁺ is checked as written.
  const auto repeated = [&](const std::string& name, const std::string& what,
                            const std::function<double(const Weight&, const Point&)>& residual) {
    s.check(name, 1e-10, [&](std::string& detail) {
      double worst = 0.0;
      for (int n = 2; n <= 5; ++n) {
        for (int t = 0; t < 50; ++t) {
          Weight lambda = s.random_weight(n, -3, 3);
          lambda[s.integer(1, n - 1)] = lambda[0];
          worst = std::max(worst, residual(lambda, s.random_point(n, -1, 1)));
        }
      }
      detail = what + ", two equal entries, n = 2..5";
      return worst;
    });
  };
  repeated("expcore.repeated_entry_minus_vanishes", "|E-|",
           [](const Weight& l, const Point& x) { return std::abs(eval_E_minus(l, x)); });
  repeated("expcore.repeated_entry_E_equals_Eplus", "|E - E+| as stated",
           [](const Weight& l, const Point& x) { return std::abs(eval_E(l, x) - eval_E_plus(l, x)); });
  repeated("expcore.repeated_entry_Eplus_twice_E", "|E+ - 2E|",
           [](const Weight& l, const Point& x) {
             return std::abs(eval_E_plus(l, x) - 2.0 * eval_E(l, x));
           });

  s.check("expcore.conjugation", 1e-10, [&](std::string& detail) {
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
      for (int t = 0; t < 50; ++t) {
        const Weight lambda = s.random_strict_weight(n);
        const Point x = s.random_point(n, -1, 1);
        for (const Weight& l : {lambda, swap_first_two(lambda)}) {
          const auto partner = conjugation_partner(l);
          worst = std::max(worst, std::abs(eval_E(l, x) - std::conj(eval_E(partner.weight, x))));
        }
      }
    }
    detail = "λ and r12 λ, n = 2..5";
    return worst;
  });

  s.check("expcore.laplacian_finite_difference", 1e-5, [&](std::string& detail) {
    double worst = 0.0;
    const double h = 1e-4;
    for (int n = 2; n <= 4; ++n) {
      for (int t = 0; t < 20; ++t) {
        const Weight lambda = s.random_weight(n, -2, 2);
        const Point x = s.random_point(n, 0.05, 0.95);
        const Complex center = eval_E(lambda, x);
        Complex laplacian = 0.0;
        for (int i = 0; i < n; ++i) {
          Point plus = x, minus = x;
          plus[i] += h;
          minus[i] -= h;
          laplacian += (eval_E(lambda, plus) - 2.0 * center + eval_E(lambda, minus)) / (h * h);
        }
        const Complex exact = laplace_spectrum(lambda).eigenvalues[0] * center;
        worst = std::max(worst, std::abs(laplacian - exact) / std::abs(exact));
      }
    }
    detail = "central differences, step 1e-4, relative error, n = 2..4";
    return worst;
  });

  s.check("expcore.sigma_k_per_summand", 1e-12, [&](std::string& detail) {
    double worst = 0.0;
    const int n = 3;
    const auto& table = alternating_group(n);
    for (int t = 0; t < 20; ++t) {
      const Weight lambda = s.random_weight(n, -2, 2);
      const auto spectrum = laplace_spectrum(lambda);
      for (std::size_t w = 0; w < table.size(); ++w) {
        const Weight mu = apply(table[w], lambda);
        // second derivative along axis j multiplies the summand by −4π² μ_j²
        std::vector<double> factors(n);
        for (int j = 0; j < n; ++j) factors[j] = -4.0 * kPi * kPi * mu[j] * mu[j];
        for (int k = 1; k <= n; ++k) {
          double sigma = 0.0;
          for (unsigned subset = 0; subset < (1U << n); ++subset) {
            if (std::popcount(subset) != k) continue;
            double product = 1.0;
            for (int j = 0; j < n; ++j)
              if (subset >> j & 1U) product *= factors[j];
            sigma += product;
          }
          const double expected = spectrum.eigenvalues[k - 1];
          worst = std::max(worst, std::abs(sigma - expected) / std::max(1.0, std::abs(expected)));
        }
      }
    }
    detail = "n = 3, k = 1..3, every summand";
    return worst;
  });
}

void finite_checks(Suite& s) {
  const auto& dims = s.config().dimensions;
  const int max_density = s.config().max_density;

  s.check("finite.orbit_counting", 0.0, [&](std::string& detail) {
    double bad = 0;
    for (int n : dims) {
      for (int N = 1; N <= max_density; ++N) {
        const GridSpec grid(n, N);
        std::size_t total = 0;
        for (std::size_t i = 0; i < grid.semidominant_points().size(); ++i)
          total += grid.group_order() / grid.stabilizer(i);
        if (total != grid.full_size()) ++bad;
        if (grid.index_set().size() != grid.semidominant_points().size()) ++bad;
      }
    }
    detail = "Σ |A_n|/|G_s| = N^n and |D| = |F|";
    return bad;
  });

  s.check("finite.orthogonality", 1e-10, [&](std::string& detail) {
    double worst = 0.0;
    for (int n : dims) {
      for (int N = 2; N <= max_density; ++N) {
        const GridSpec grid(n, N);
        std::vector<SampleField> basis;
        for (const auto& m : grid.index_set()) basis.push_back(basis_samples(m, grid));
        for (std::size_t a = 0; a < basis.size(); ++a) {
          for (std::size_t b = 0; b < basis.size(); ++b) {
            const Complex ip = weighted_inner_product(basis[a], basis[b], grid);
            const double expected =
                a == b ? static_cast<double>(stabilizer_order(grid.index_set()[a])) : 0.0;
            worst = std::max(worst, std::abs(ip - expected));
          }
        }
      }
    }
    detail = "all pairs of the index set, N = 2.." + std::to_string(max_density);
    return worst;
  });

  double parseval_worst = 0.0;
  s.check("finite.round_trip", 1e-9, [&](std::string& detail) {
    double worst = 0.0;
    for (int n : dims) {
      for (int N = 2; N <= max_density; ++N) {
        const GridSpec grid(n, N);
        for (int t = 0; t < 5; ++t) {
          SampleField f(n, N);
          CoefficientMap a(n, N);
          for (const auto& k : grid.semidominant_points())
            f.set(k, Complex(s.uniform(-1, 1), s.uniform(-1, 1)));
          for (const auto& m : grid.index_set())
            a.set(m.vector(), Complex(s.uniform(-1, 1), s.uniform(-1, 1)));
          const auto coefficients = forward(f, grid);
          const auto back = inverse(coefficients, grid);
          for (const auto& [k, v] : f.values()) worst = std::max(worst, std::abs(back.at(k) - v));
          const auto again = forward(inverse(a, grid), grid);
          for (const auto& [m, v] : a.values()) worst = std::max(worst, std::abs(again.at(m) - v));

          const double samples_side = weighted_inner_product(f, f, grid).real();
          double coefficient_side = 0.0;
          for (const auto& [m, v] : coefficients.values())
            coefficient_side += static_cast<double>(stabilizer_order(std::span<const int>(m))) * std::norm(v);
          parseval_worst = std::max(parseval_worst, std::abs(samples_side - coefficient_side));
        }
      }
    }
    detail = "inverse∘forward and forward∘inverse on random data";
    return worst;
  });
  s.check("finite.parseval", 1e-9, [&](std::string& detail) {
    detail = "|A_n| Σ |G_s|^{-1}|f|² = Σ |G_m||a_m|²";
    return parseval_worst;
  });
}

ComplexFunction band_limited(const std::vector<std::pair<IntegerWeight, Complex>>& terms) {
  return [terms](const Point& x) {
    Complex total = 0.0;
    for (const auto& [m, c] : terms) total += c * eval_E(m, x);
    return total;
  };
}

void continuous_checks(Suite& s) {
  const auto& dims = s.config().dimensions;
  const int resolution = s.config().resolution;

  s.check("continuous.torus_orthogonality", 1e-10, [&](std::string& detail) {
    double worst = 0.0;
    for (int n : dims) {
      if (n > 3) continue;
      const auto weights = canonical_integer_weights(n, -3, 3);
      // midpoint rule with M > 2 max|m_i| integrates every product exactly
      const auto spec = QuadratureSpec::torus(8);
      const Rule1D rule = axis_rule(spec);
      std::vector<Point> nodes;
      std::vector<std::size_t> index(n, 0);
      const std::size_t total = tensor_size(n, spec.resolution);
      for (std::size_t flat = 0; flat < total; ++flat) {
        std::vector<double> c(n);
        for (int i = 0; i < n; ++i) c[i] = rule.nodes[index[i]];
        nodes.emplace_back(c);
        for (int i = n - 1; i >= 0; --i) {
          if (++index[i] < static_cast<std::size_t>(spec.resolution)) break;
          index[i] = 0;
        }
      }
      const double cell = 1.0 / static_cast<double>(total);
      std::vector<std::vector<Complex>> values(weights.size());
      for (std::size_t a = 0; a < weights.size(); ++a)
        for (const auto& p : nodes) values[a].push_back(eval_E(weights[a], p));
      const double order = static_cast<double>(alternating_group_order(n));
      for (std::size_t a = 0; a < weights.size(); ++a) {
        for (std::size_t b = 0; b < weights.size(); ++b) {
          Complex ip = 0.0;
          for (std::size_t k = 0; k < nodes.size(); ++k) ip += values[a][k] * std::conj(values[b][k]);
          ip *= cell;
          const double expected =
              a == b ? order * static_cast<double>(stabilizer_order(weights[a])) : 0.0;
          worst = std::max(worst, std::abs(ip - expected));
        }
      }
    }
    detail = "∫_T E_m conj E_m' = |A_n||G_m|δ, entries in [-3,3], M = 8";
    return worst;
  });

  double plancherel_worst = 0.0;
  s.check("continuous.series_recovery", 1e-8, [&](std::string& detail) {
    double worst = 0.0;
    for (int n : dims) {
      if (n > 3) continue;
      const int cutoff = 2;
      const auto weights = canonical_integer_weights(n, -cutoff, cutoff);
      std::vector<std::pair<IntegerWeight, Complex>> terms;
      for (int t = 0; t < 4; ++t)
        terms.emplace_back(weights[s.integer(0, static_cast<int>(weights.size()) - 1)],
                           Complex(s.uniform(-1, 1), s.uniform(-1, 1)));
      std::map<std::vector<int>, Complex> expected;
      for (const auto& [m, c] : terms) expected[m.vector()] += c;
      const SymmetricFunction f(n, band_limited(terms), s.config().seed);
      const auto spec = QuadratureSpec::torus(n == 2 ? resolution : std::min(resolution, 16));
      const auto coefficients = series_coefficients(f, cutoff, spec);
      for (const auto& [m, c] : coefficients.values) {
        const auto it = expected.find(m);
        worst = std::max(worst, std::abs(c - (it == expected.end() ? Complex(0.0) : it->second)));
      }
      for (int t = 0; t < 5; ++t) {
        const Point x = s.random_point(n, 0, 1);
        worst = std::max(worst, std::abs(series_partial_sum(coefficients, x) - f(x)));
      }
      plancherel_worst = std::max(plancherel_worst, plancherel_residual(f, cutoff, spec).residual());
    }
    detail = "band-limited symmetric functions, cutoff 2";
    return worst;
  });
  s.check("continuous.plancherel", 1e-6, [&](std::string& detail) {
    detail = "Σ |G_m||c_m|² = ∫_F |f|²";
    return plancherel_worst;
  });

  s.check("continuous.fundamental_domain_volume", 0.01, [&](std::string& detail) {
    double worst = 0.0;
    for (int n : {2, 3, 4}) {
      const double expected = 1.0 / static_cast<double>(alternating_group_order(n));
      const double measured = fundamental_domain_volume(n, 1000000, s.config().seed);
      worst = std::max(worst, std::abs(measured - expected) / expected);
    }
    detail = "Monte Carlo, 10^6 samples, relative error, n = 2..4";
    return worst;
  });
}

void hermite_checks(Suite& s) {
  s.check("hermite.one_dimensional", 1e-6, [&](std::string& detail) {
    double worst = 0.0;
    for (int m = 0; m <= 6; ++m)
      for (double x : {0.4, -0.7, 1.1}) worst = std::max(worst, hermite_1d_residual(m, x));
    detail = "stated eigenvalue i^{-m}, m = 0..6, 200-point Gauss–Legendre on [-6,6]";
    return worst;
  });

  const auto box = QuadratureSpec::box(s.config().box_half_width, s.config().box_points);
  std::vector<HermiteIndex> indices;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) indices.emplace_back(std::vector<int>{a, b});
  const std::vector<Weight> probes = {Weight{0.3, -0.2}, Weight{0.8, 0.45}, Weight{-0.5, 0.9}};

  s.check("hermite.eigenfunction", 1e-4, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& m : indices)
      for (const auto& lambda : probes) worst = std::max(worst, hermite_eigenfunction_residual(m, lambda, box));
    detail = "n = 2, |m| <= 4, stated eigenvalue i^{-|m|}";
    return worst;
  });

  s.check("hermite.eigenvalue_recovery", 0.0, [&](std::string& detail) {
    double bad = 0;
    std::string mismatched;
    for (const auto& m : indices) {
      const Complex found = recover_hermite_eigenvalue(m, probes[1], box);
      if (std::abs(found - stated_hermite_eigenvalue(m.degree())) > 0.5) {
        ++bad;
        mismatched += " (" + std::to_string(m[0]) + "," + std::to_string(m[1]) + ")";
      }
    }
    detail = "recovered eigenvalue vs i^{-|m|}";
    if (bad > 0) detail += "; mismatched m:" + mismatched;
    return bad;
  });

  s.check("hermite.fourth_power_identity", 1e-3, [&](std::string& detail) {
    const GridTransform transform(2, QuadratureSpec::box(s.config().box_half_width, 128,
                                                         QuadratureScheme::midpoint_tensor));
    std::vector<Complex> f(transform.size(), 0.0);
    for (const auto& m : indices) {
      if (m.degree() > 3) continue;
      const Complex c(s.uniform(-1, 1), s.uniform(-1, 1));
      const auto values = transform.sample(hermite_function(m));
      for (std::size_t k = 0; k < f.size(); ++k) f[k] += c * values[k];
    }
    auto g = f;
    for (int r = 0; r < 4; ++r) g = transform.forward(g);
    double worst = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) worst = std::max(worst, std::abs(g[k] - f[k]));
    detail = "n = 2, random combination of eigenfunctions with |m| <= 3";
    return worst;
  });
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verification(const VerifyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  Suite suite(config, report);
  altgroup_checks(suite);
  expcore_checks(suite);
  finite_checks(suite);
  continuous_checks(suite);
  hermite_checks(suite);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void write_report_text(std::ostream& out, const VerifyReport& report) {
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(40) << c.name
        << " residual=" << std::scientific << std::setprecision(3) << c.residual
        << " tol=" << c.tolerance << std::defaultfloat;
    if (!c.detail.empty()) out << "  [" << c.detail << ']';
    out << '\n';
    if (!c.passed) ++failed;
  }
  out << report.checks.size() - failed << '/' << report.checks.size() << " checks passed in "
      << std::fixed << std::setprecision(1) << report.seconds << " s" << std::defaultfloat
      << '\n';
}

void write_report_json(std::ostream& out, const VerifyReport& report) {
  nlohmann::json doc;
  doc["passed"] = report.all_passed();
  doc["seconds"] = report.seconds;
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json entry{{"name", c.name},
                         {"passed", c.passed},
                         {"tolerance", c.tolerance},
                         {"detail", c.detail}};
    // JSON has no infinity; an exception-failed check reports null.
    if (std::isfinite(c.residual)) {
      entry["residual"] = c.residual;
    } else {
      entry["residual"] = nullptr;
    }
    doc["checks"].push_back(entry);
  }
  out << doc.dump(1) << '\n';
}

}  // namespace altexp
