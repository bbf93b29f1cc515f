#pragma once

#include <vector>

#include "s2dkp/model.hpp"
#include "s2dkp/spectra.hpp"
#include "s2dkp/tridiagonal.hpp"

namespace s2dkp {

/**
 * Conservative second-order discretization of -(d^2/dr^2 + cot r d/dr) + V
 * on r_i = i pi / N, i = 1..N-1, with Dirichlet ends, symmetrized by the
 * sqrt(sin r_i) similarity.
 */
struct TridiagonalOperator {
  int N = 0;  // intervals; the matrix has N - 1 rows
  double h = 0.0;
  SymTridiagonal matrix;
};

/// Requires N >= 16 and strictly positive exponents A, C for the sector
/// (throws InvalidBoundary otherwise).
TridiagonalOperator discretize(const ParameterSet& p, Branch equation, int N);

/// Richardson extrapolation over grids N, 2N, 4N removing h^2 and h^4.
double richardson(double coarse, double mid, double fine);

/// log2((coarse - mid) / (mid - fine)).
double observed_order(double coarse, double mid, double fine);

struct OracleResult {
  std::vector<int> grids;                      // N, 2N, 4N
  std::vector<std::vector<double>> raw;        // raw[g][k]
  std::vector<double> eigenvalues;             // extrapolated, increasing
  std::vector<double> estimated_error;         // |three-grid - two-grid| per eigenvalue
  std::vector<double> convergence_order;       // per eigenvalue
};

/// Requires exactly three grids in ratio 1:2:4.
void validate_grids(const std::vector<int>& grids);

/// Lowest `k` eigenvalues of one (equation, m, B) sector on the given grids.
OracleResult solve_sector(const ParameterSet& p, Branch equation, const std::vector<int>& grids, int k);

struct Comparison {
  double closed_form = 0.0;  // spectral term of the line
  double oracle = 0.0;       // extrapolated eigenvalue n of the sector
  double abs_err = 0.0;
  double estimated_error = 0.0;
  double convergence_order = 0.0;
};

/// The oracle eigenvalue index is the line's n. Throws InvalidBoundary for
/// sectors with a vanishing exponent.
Comparison compare(const SpectralLine& line, const std::vector<int>& grids);

/// Whether the line's sector admits Dirichlet endpoints (A > 0 and C > 0).
bool oracle_admissible(const SpectralLine& line);

}  // namespace s2dkp
