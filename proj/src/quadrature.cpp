#include "s2dkp/quadrature.hpp"

#include <cmath>

#include "s2dkp/errors.hpp"

namespace s2dkp {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Gauss-Legendre order must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      // P_n = p1, P_{n-1} = p0.
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

namespace {

double panel(const std::function<double(double)>& f, const GaussRule& rule, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return half * sum;
}

}  // namespace

double integrate_unit_interval(const std::function<double(double)>& f, const GaussRule& rule,
                               int dyadic_levels) {
  // [0, 1/2] as [2^-(j+1), 2^-j] for j = 1..levels, mirrored for [1/2, 1].
  double total = 0.0;
  for (int j = 1; j <= dyadic_levels; ++j) {
    const double lo = std::ldexp(1.0, -(j + 1));
    const double hi = std::ldexp(1.0, -j);
    total += panel(f, rule, lo, hi);
    total += panel([&](double y) { return f(1.0 - y); }, rule, lo, hi);
  }
  return total;
}

}  // namespace s2dkp
