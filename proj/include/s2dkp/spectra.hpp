#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "s2dkp/model.hpp"

namespace s2dkp {

/// Non-negative hypergeometric exponents and the signed arguments they come from.
struct Exponents {
  double a_arg = 0.0;  // A = |a_arg| / 2, controls behaviour at r = pi
  double c_arg = 0.0;  // C = |c_arg| / 2, controls behaviour at r = 0
  double A = 0.0;
  double C = 0.0;
};

/// Exponents of the radial equation of `branch` for given m and B.
Exponents exponents(Branch branch, int m, double B);

/// N = n + 1/2 + (|a| + |c|) / 2.
double quantization_rhs(Branch branch, int n, int m, double B);

/// eps = (N^2 - 1/4 - B^2 - sigma B) / (2 M), sigma = +1, 0, -1.
double energy_nonrel(Branch branch, int n, int m, double B, double M);

/**
 * sqrt(B^2 + sigma B + 2 eps M + 1/4) - N for an externally supplied eps.
 * Throws NegativeRadicand when the radicand is negative.
 */
double nonrel_condition_residual(Branch branch, int n, int m, double B, double M, double eps);

struct RelativisticRoots {
  double plus = 0.0;
  double minus = 0.0;  // minus < plus
};

/// Roots of eps^2 + 2 s (B/M) eps - K = 0 (s = +1 SMinus, -1 SPlus, 0 SZero).
/// Throws ComplexRoots when the discriminant is negative.
RelativisticRoots solve_relativistic_quadratic(Branch branch, double K, double B, double M);

/**
 * Both energies of the relativistic condition obtained from
 * sqrt(B^2 + X + 1/4) = N_zero, with X = eps^2 - M^2 - 2 s eps B / M:
 * s = +1 for SPlus, 0 for SZero, -1 for SMinus.
 */
RelativisticRoots energy_rel(Branch branch, int n, int m, double B, double M);

/// X(eps): the quantity that replaces 2 eps M in the relativistic condition.
double relativistic_shift_term(Branch branch, double eps, double B, double M);

struct LineFlags {
  bool borderline = false;       // A == 0 or C == 0
  bool negative_energy = false;  // nonrelativistic eps < 0
  bool complex_roots = false;    // relativistic discriminant < 0
};

struct SpectralLine {
  Branch branch = Branch::SZero;
  bool relativistic = false;
  int n = 0;
  int m = 0;
  double B = 0.0;
  double M = 1.0;
  double N = 0.0;
  double A = 0.0;
  double C = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 1.0;
  double energy = 0.0;                     // nonrelativistic
  std::optional<RelativisticRoots> roots;  // relativistic, absent when complex
  LineFlags flags;

  /// Radial equation the wavefunction obeys (SZero for every relativistic line).
  Branch equation() const { return relativistic ? Branch::SZero : branch; }

  /// Closed-form eigenvalue of -(d^2 + cot d - V): 2 eps M, or X(eps_plus).
  double spectral_term() const;

  /// Energy used by default for this line: eps, or eps_plus.
  double primary_energy() const;
};

SpectralLine make_line(Branch branch, bool relativistic, int n, int m, double B, double M);

/**
 * Every line for n in [0, n_max], m in [m_min, m_max] (empty when m_min > m_max),
 * sorted by energy then (n, m).
 */
std::vector<SpectralLine> enumerate_spectrum(const ParameterSet& p, Branch branch, bool relativistic,
                                             int n_max, int m_min, int m_max);

}  // namespace s2dkp
