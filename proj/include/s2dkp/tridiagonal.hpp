#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace s2dkp {

/// Symmetric tridiagonal matrix: diag[0..n), off[0..n-1) with off[i] = T(i, i+1).
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence / LDL^T inertia).
std::size_t sturm_count(std::span<const double> diag, std::span<const double> off, double x);

/// Gershgorin interval containing the whole spectrum.
std::pair<double, double> gershgorin_bounds(std::span<const double> diag, std::span<const double> off);

/**
 * The k smallest eigenvalues in increasing order, by bisection on the Sturm
 * count to relative tolerance `rel_tol`. Requires 1 <= k <= size.
 */
std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, std::size_t k, double rel_tol = 1e-12);

}  // namespace s2dkp
