#pragma once

#include <functional>
#include <vector>

namespace s2dkp {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule via Newton iteration on P_n.
GaussRule gauss_legendre(int n);

/**
 * Integral over [0, 1] of a function that may behave like y^a (1-y)^b at the
 * ends. Panels are graded geometrically toward both endpoints so each one
 * sees a smooth integrand; each panel uses the given rule.
 */
double integrate_unit_interval(const std::function<double(double)>& f, const GaussRule& rule,
                               int dyadic_levels = 48);

}  // namespace s2dkp
