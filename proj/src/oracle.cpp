#include "s2dkp/oracle.hpp"

#include <cmath>
#include <string>

#include "s2dkp/errors.hpp"

namespace s2dkp {

TridiagonalOperator discretize(const ParameterSet& p, Branch equation, int N) {
  p.validate();
  if (N < 16) throw Error(ErrorCode::InvalidArgument, "grid size must be at least 16");
  const Exponents e = exponents(equation, p.m, p.B);
  if (e.A == 0.0 || e.C == 0.0) {
    throw Error(ErrorCode::InvalidBoundary,
                "sector (" + std::string(to_string(equation)) + ", m=" + std::to_string(p.m) +
                    ", B=" + std::to_string(p.B) + ") has a non-vanishing endpoint");
  }

  TridiagonalOperator op;
  op.N = N;
  op.h = M_PI / N;
  const double h = op.h, h2 = h * h;
  const int n = N - 1;
  op.matrix.diag.resize(n);
  op.matrix.off.resize(n - 1);
  for (int i = 1; i <= n; ++i) {
    const double r = i * h;
    const double s = std::sin(r);
    const double s_lo = std::sin(r - 0.5 * h);
    const double s_hi = std::sin(r + 0.5 * h);
    op.matrix.diag[i - 1] = (s_lo + s_hi) / (h2 * s) + potential(p, equation, r);
    if (i < n) {
      const double s_next = std::sin(r + h);
      op.matrix.off[i - 1] = -s_hi / (h2 * std::sqrt(s * s_next));
    }
  }
  return op;
}

double richardson(double coarse, double mid, double fine) {
  const double r1 = (4.0 * mid - coarse) / 3.0;
  const double r2 = (4.0 * fine - mid) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

double observed_order(double coarse, double mid, double fine) {
  return std::log2((coarse - mid) / (mid - fine));
}

void validate_grids(const std::vector<int>& grids) {
  if (grids.size() != 3 || grids[1] != 2 * grids[0] || grids[2] != 2 * grids[1] || grids[0] < 16) {
    throw Error(ErrorCode::InvalidArgument, "grids must be N, 2N, 4N with N >= 16");
  }
}

OracleResult solve_sector(const ParameterSet& p, Branch equation, const std::vector<int>& grids, int k) {
  validate_grids(grids);
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "need at least one eigenvalue");
  OracleResult out;
  out.grids = grids;
  for (int N : grids) {
    const auto op = discretize(p, equation, N);
    out.raw.push_back(lowest_eigenvalues(op.matrix, static_cast<std::size_t>(k)));
  }
  for (int j = 0; j < k; ++j) {
    const double c = out.raw[0][j], m = out.raw[1][j], f = out.raw[2][j];
    const double extrapolated = richardson(c, m, f);
    out.eigenvalues.push_back(extrapolated);
    out.estimated_error.push_back(std::abs(extrapolated - (4.0 * f - m) / 3.0));
    out.convergence_order.push_back(observed_order(c, m, f));
  }
  return out;
}

bool oracle_admissible(const SpectralLine& line) { return line.A > 0.0 && line.C > 0.0; }

Comparison compare(const SpectralLine& line, const std::vector<int>& grids) {
  const ParameterSet p{line.B, line.M, line.m};
  const OracleResult result = solve_sector(p, line.equation(), grids, line.n + 1);
  Comparison c;
  c.closed_form = line.spectral_term();
  c.oracle = result.eigenvalues[line.n];
  c.abs_err = std::abs(c.closed_form - c.oracle);
  c.estimated_error = result.estimated_error[line.n];
  c.convergence_order = result.convergence_order[line.n];
  return c;
}

}  // namespace s2dkp
