#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace altexp {

struct VerifyConfig {
  std::vector<int> dimensions = {2, 3};
  int max_density = 5;        // largest grid N
  int resolution = 64;        // torus quadrature points per axis
  std::uint64_t seed = 0;
  std::optional<double> tolerance;  // replaces every per-check tolerance
  double box_half_width = 6.0;
  int box_points = 96;        // Gauss–Legendre points per axis on the box
};

struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool passed;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool all_passed() const;
};

/// Runs every invariant suite; each check records its worst residual.
VerifyReport run_verification(const VerifyConfig& config);

void write_report_text(std::ostream& out, const VerifyReport& report);
void write_report_json(std::ostream& out, const VerifyReport& report);

}  // namespace altexp
