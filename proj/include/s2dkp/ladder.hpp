#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "s2dkp/errors.hpp"
#include "s2dkp/jet.hpp"
#include "s2dkp/model.hpp"

namespace s2dkp {

/**
 * Value of a radial function and its first two derivatives at r.
 *
 * `order` is the number of trustworthy derivatives (0, 1 or 2). Applying a
 * first-order operator consumes one.
 */
template <typename T>
struct DualSample {
  double r = 0.0;
  T f{};
  T df{};
  T ddf{};
  int order = 2;

  static DualSample from_jet(double r, const Jet<T>& j) { return {r, j.v, j.d, j.dd, 2}; }
};

/// Samples f at r by seeding r as the jet variable.
template <typename F>
DualSample<double> sample(F&& f, double r) {
  return DualSample<double>::from_jet(r, f(Jet2::variable(r)));
}

/**
 * The six first-order radial operators, all carrying the 1/sqrt2 prefactor:
 *
 *   A      = ( d/dr + nu / sin r)
 *   APlus  = ( d/dr + (nu + cos r) / sin r)
 *   AMinus = ( d/dr + (nu - cos r) / sin r)
 *   B      = (-d/dr + nu / sin r)
 *   BPlus  = (-d/dr + (nu + cos r) / sin r)
 *   BMinus = (-d/dr + (nu - cos r) / sin r)
 */
enum class LadderKind { A, APlus, AMinus, B, BPlus, BMinus };

struct LadderOp {
  LadderKind kind;
  ParameterSet params;

  /// +1 for the a-family, -1 for the b-family.
  int derivative_sign() const;
  /// Coefficient of cos r in the multiplicative part: 0, +1 or -1.
  int cos_shift() const;
  /// Multiplicative coefficient (nu + shift cos r) / sin r as a jet in r.
  Jet2 coefficient(double r) const;
};

void require_regular_point(double r);

template <typename T>
DualSample<T> apply(const LadderOp& op, const DualSample<T>& s) {
  if (s.order < 1) {
    throw Error(ErrorCode::InvalidArgument, "ladder operator needs a sample with a first derivative");
  }
  require_regular_point(s.r);
  const Jet2 w = op.coefficient(s.r);
  const double sign = op.derivative_sign();
  const double k = 1.0 / std::sqrt(2.0);
  DualSample<T> out;
  out.r = s.r;
  out.order = s.order - 1;
  out.f = k * (sign * s.df + w.v * s.f);
  if (out.order >= 1) out.df = k * (sign * s.ddf + w.d * s.f + w.v * s.df);
  return out;
}

/// (outer (inner f))(r). Requires a sample carrying two derivatives.
template <typename T>
T compose2(const LadderOp& outer, const LadderOp& inner, const DualSample<T>& s) {
  if (s.order < 2) {
    throw Error(ErrorCode::InvalidArgument, "composition needs a sample with two derivatives");
  }
  return s2dkp::apply(outer, s2dkp::apply(inner, s)).f;
}

/// f'' + cot r f' - V f for the chosen branch potential.
template <typename T>
T explicit_operator(const ParameterSet& p, Branch branch, const DualSample<T>& s) {
  require_regular_point(s.r);
  return s.ddf + (std::cos(s.r) / std::sin(s.r)) * s.df - potential(p, branch, s.r) * s.f;
}

/// Second-order operator produced by the ladder compositions for each branch:
///   SPlus: -2 A BMinus,  SZero: -BMinus A - APlus B,  SMinus: -2 B APlus.
double pauli_operator(const ParameterSet& p, Branch branch, const DualSample<double>& s);

/// -BMinus A + APlus B applied to f.
double shift_operator(const ParameterSet& p, const DualSample<double>& s);

/// A named closed-form radial test function.
struct TestFunction {
  std::string name;
  std::function<Jet2(const Jet2&)> f;
};

/// {1, sin r, sin^2 r, cos r sin r, sin^|m| r}.
std::vector<TestFunction> test_function_corpus(int m);

/// Random linear combinations of the corpus functions, reproducible from `seed`.
std::vector<TestFunction> random_test_functions(int m, unsigned long long seed, int count);

/// Chebyshev-spaced points on (lo, hi), in increasing order.
std::vector<double> chebyshev_grid(int count = 64, double lo = 0.05, double hi = M_PI - 0.05);

struct IdentityReport {
  double delta_laplacian = 0.0;  // max |(-BMinus A - APlus B) f - Delta_2 f|
  double shift_constant = 0.0;   // measured c in (-BMinus A + APlus B) f = c f
  double shift_spread = 0.0;     // (max - min) of the pointwise ratio, relative to max(1, |c|)
  bool shift_is_constant = true; // false means NOT_A_CONSTANT
  double B = 0.0;
  double two_B = 0.0;
};

/**
 * Checks the Laplacian identity pointwise and measures the shift constant.
 * Ratios are taken only where |f| exceeds 1e-8 of its grid maximum.
 */
IdentityReport check_identities(const ParameterSet& p, const std::vector<TestFunction>& functions,
                                const std::vector<double>& grid, double constant_tolerance = 1e-10);

/// max over functions, grid and branches of |pauli_operator - explicit_operator|.
double composition_deviation(const ParameterSet& p, const std::vector<TestFunction>& functions,
                             const std::vector<double>& grid);

using ComplexSample = DualSample<std::complex<double>>;

/// The ten radial components, each sampled with at least one derivative.
struct ComponentSet {
  enum Index { Phi0, Phi1, Phi2, Phi3, E1, E2, E3, H1, H2, H3, kCount };
  std::array<std::function<ComplexSample(double)>, kCount> components;

  static ComponentSet zero();
};

/// Max absolute residual of the ten first-order radial equations over the grid.
double verify_first_order_system(const ComponentSet& solution, double eps, const ParameterSet& p,
                                 const std::vector<double>& grid);

}  // namespace s2dkp
