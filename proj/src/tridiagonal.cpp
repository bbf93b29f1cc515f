#include "s2dkp/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "s2dkp/errors.hpp"

namespace s2dkp {

namespace {

double pivot_floor(std::span<const double> off) {
  double big = 1.0;
  for (double b : off) big = std::max(big, b * b);
  return std::numeric_limits<double>::min() * big;
}

std::size_t count_below(std::span<const double> diag, std::span<const double> off, double x,
                        double pivmin) {
  std::size_t count = 0;
  double d = diag[0] - x;
  if (std::abs(d) < pivmin) d = -pivmin;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    d = diag[i] - x - off[i - 1] * off[i - 1] / d;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::size_t sturm_count(std::span<const double> diag, std::span<const double> off, double x) {
  if (diag.empty()) return 0;
  if (off.size() + 1 != diag.size()) throw Error(ErrorCode::DimensionMismatch, "off-diagonal length");
  return count_below(diag, off, x, pivot_floor(off));
}

std::pair<double, double> gershgorin_bounds(std::span<const double> diag, std::span<const double> off) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i + 1 < diag.size()) radius += std::abs(off[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  return {lo, hi};
}

std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, std::size_t k, double rel_tol) {
  const std::size_t n = t.size();
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= size");
  if (t.off.size() + 1 != n) throw Error(ErrorCode::DimensionMismatch, "off-diagonal length");

  const double pivmin = pivot_floor(t.off);
  auto [glo, ghi] = gershgorin_bounds(t.diag, t.off);
  const double span_abs = std::max(std::abs(glo), std::abs(ghi));
  glo -= 2.0 * std::numeric_limits<double>::epsilon() * span_abs + pivmin;
  ghi += 2.0 * std::numeric_limits<double>::epsilon() * span_abs + pivmin;
  const double abs_floor = 4.0 * std::numeric_limits<double>::min() + pivmin;

  std::vector<double> out;
  out.reserve(k);
  double lower = glo;
  for (std::size_t j = 0; j < k; ++j) {
    // Invariant: count(lo) <= j < count(hi).
    double lo = lower, hi = ghi;
    while (true) {
      const double width = hi - lo;
      const double scale = std::max(std::abs(lo), std::abs(hi));
      if (width <= rel_tol * scale || width <= abs_floor) break;
      const double mid = lo + 0.5 * width;
      if (mid <= lo || mid >= hi) break;
      if (count_below(t.diag, t.off, mid, pivmin) > j) hi = mid; else lo = mid;
    }
    const double value = 0.5 * (lo + hi);
    out.push_back(value);
    lower = lo;
  }
  return out;
}

}  // namespace s2dkp
