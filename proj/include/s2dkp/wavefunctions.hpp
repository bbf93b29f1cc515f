#pragma once

#include <vector>

#include "s2dkp/algebra.hpp"
#include "s2dkp/jet.hpp"
#include "s2dkp/ladder.hpp"
#include "s2dkp/spectra.hpp"

namespace s2dkp {

/// Terminating series F(-n, beta, gamma; y).
class HypergeometricPoly {
 public:
  /// Throws GammaPole when gamma is in {0, -1, ..., -(n-1)}.
  HypergeometricPoly(int n, double beta, double gamma);

  int degree() const { return n_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  /// Horner evaluation of the terminating series.
  double operator()(double y) const;
  Jet2 operator()(const Jet2& y) const;

  /**
   * Same polynomial evaluated as n! / (a+1)_n * P_n^(a,b)(1 - 2y) with
   * a = gamma - 1, b = beta - gamma - n, using the Jacobi three-term
   * recurrence. The alternating series loses many digits near y = 1 for
   * n >~ 6; the recurrence does not. Falls back to Horner unless a, b > -1.
   */
  double stable(double y) const;
  Jet2 stable(const Jet2& y) const;

 private:
  int n_;
  double beta_;
  double gamma_;
  std::vector<double> coeffs_;
};

double hyp_eval(const HypergeometricPoly& poly, double y);

/// normalization * y^C (1 - y)^A * F(-n, beta, gamma; y), with y = sin^2(r/2).
struct RadialProfile {
  double A = 0.0;
  double C = 0.0;
  HypergeometricPoly poly{0, 1.0, 1.0};
  Branch branch = Branch::SZero;  // equation the profile solves
  double normalization = 1.0;

  double value_y(double y) const;
  /// Profile as a function of r, with exact first and second derivatives.
  Jet2 operator()(const Jet2& r) const;
  DualSample<double> sample(double r) const;
};

/**
 * Builds and normalizes the profile of `line` so that
 * integral_0^pi psi^2 sin r dr = 1, positive near r = 0.
 * Throws GammaPole or NonNormalizable.
 */
RadialProfile build_profile(const SpectralLine& line);

/// integral_0^pi psi_a psi_b sin r dr.
double overlap(const RadialProfile& a, const RadialProfile& b);

/// Sign changes of the polynomial part on `samples` interior points of (0, 1).
int polynomial_sign_changes(const RadialProfile& profile, int samples = 10000);

/**
 * max over grid of |psi'' + cot r psi' - V psi + lambda psi| / max |psi|,
 * where lambda is the spectral term (2 eps M nonrelativistically).
 */
double residual_ode_lambda(const RadialProfile& profile, double lambda, const ParameterSet& p,
                           const std::vector<double>& grid);

/// residual_ode_lambda with lambda = 2 eps M.
double residual_ode(const RadialProfile& profile, double eps, const ParameterSet& p,
                    const std::vector<double>& grid);

/**
 * Residual of the hypergeometric y-form for the polynomial part, with the
 * 1/y and 1/(1-y) terms kept explicitly, normalized by max |F| on the grid.
 * `lambda` plays the role of 2 eps M; `sigma_b` is the branch's B^2 + sigma B
 * shift minus B^2 (sigma B for the nonrelativistic branches, 0 for the
 * Laplacian form).
 */
double residual_hypergeometric(const RadialProfile& profile, const Exponents& exps, double lambda,
                               double sigma_b, double B, const std::vector<double>& grid);

/// Residuals of one line in both forms at its quantized energy.
struct LineResiduals {
  double r_form = 0.0;
  double y_form = 0.0;
};

LineResiduals line_residuals(const SpectralLine& line, const RadialProfile& profile,
                             const std::vector<double>& grid);

/**
 * Simple relativistic solution: Phi0 = Phi1 = Phi3 = 0, Phi2 = profile,
 * E2 = -i eps/M Phi2, H1 = -i/M A Phi2, H3 = i/M B Phi2, rest zero.
 * The line must be a relativistic SZero line.
 */
ComponentSet build_simple_relativistic_branch(const SpectralLine& line, double eps);

struct CouplingDiagonalization {
  double lambda1 = 0.0;  // +2 eps B / M
  double lambda2 = 0.0;  // -2 eps B / M
  ComplexMatrix A;       // [[0, 2iB], [-2iB gamma, 0]], gamma = eps^2 / M^2
  ComplexMatrix S;
  ComplexMatrix S_inv;
  double diagonal_deviation = 0.0;  // max |S A S^-1 - diag(lambda1, lambda2)|
  double inverse_deviation = 0.0;   // max |S S^-1 - I|
};

/// Throws SingularTransform when eps == 0.
CouplingDiagonalization diagonalize_coupling(double B, double M, double eps);

}  // namespace s2dkp
