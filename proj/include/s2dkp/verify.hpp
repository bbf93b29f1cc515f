#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s2dkp/model.hpp"

namespace s2dkp {

struct CheckResult {
  std::string suite;
  std::string name;
  double value = 0.0;      // measured deviation
  double tolerance = 0.0;  // pass when value <= tolerance
  bool passed = false;
  std::map<std::string, double> info;  // reported quantities that do not gate
};

struct VerifyOptions {
  double B = 1.0;
  double M = 1.0;
  int m_min = -2;
  int m_max = 2;
  int n_max = 3;             // oracle and first-order sweeps
  int residual_n_max = 10;   // closed-form residual sweep
  std::vector<int> grids{1000, 2000, 4000};
  unsigned long long seed = 12345;
  std::optional<double> tolerance;  // replaces every gating tolerance when set
};

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"algebra",  "identities",      "composition", "spectra",
                                              "residuals", "diagonalization", "first-order", "oracle"};
  return names;
}

/// Runs one named suite. Throws InvalidArgument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& options);

std::vector<CheckResult> run_all_suites(const VerifyOptions& options);

}  // namespace s2dkp
