#pragma once

#include <string>
#include <vector>

namespace probekit {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ValidationOptions {
  int grid_points = 1000;
  // Test hook: scales one conclusive POVM element by 1.1 so the
  // completeness check must fail.
  bool inject_perturbation = false;
};

/// Dense-grid run of every analytic identity the model promises:
/// state normalization, overlap and norm identities, swap symmetry,
/// route equivalence of the two overlap computations, monotonicity,
/// parameterization round trips, POVM validity and achieved rates,
/// continuity across E = 1/4, and endpoint values.
std::vector<CheckResult> run_analytic_checks(const ValidationOptions& options);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace probekit
