#include "s2dkp/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

namespace s2dkp {

namespace {

void require_level(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
}

void require_mass(double M) {
  if (!(M > 0.0)) throw Error(ErrorCode::InvalidArgument, "M must be positive");
}

// Shift sign s in X = eps^2 - M^2 - 2 s eps B / M.
int relativistic_sign(Branch b) { return branch_sign(b); }

}  // namespace

Exponents exponents(Branch branch, int m, double B) {
  Exponents e;
  switch (branch) {
    case Branch::SPlus:
      e.a_arg = 2.0 * B + m + 1;
      e.c_arg = m - 1;
      break;
    case Branch::SZero:
      e.a_arg = 2.0 * B + m;
      e.c_arg = m;
      break;
    case Branch::SMinus:
      e.a_arg = 2.0 * B + m - 1;
      e.c_arg = m + 1;
      break;
  }
  e.A = 0.5 * std::abs(e.a_arg);
  e.C = 0.5 * std::abs(e.c_arg);
  return e;
}

double quantization_rhs(Branch branch, int n, int m, double B) {
  require_level(n);
  const Exponents e = exponents(branch, m, B);
  return n + 0.5 + e.A + e.C;
}

double energy_nonrel(Branch branch, int n, int m, double B, double M) {
  require_mass(M);
  const double N = quantization_rhs(branch, n, m, B);
  return (N * N - 0.25 - B * B - branch_sign(branch) * B) / (2.0 * M);
}

double nonrel_condition_residual(Branch branch, int n, int m, double B, double M, double eps) {
  require_mass(M);
  const double radicand = B * B + branch_sign(branch) * B + 2.0 * eps * M + 0.25;
  if (radicand < 0.0) {
    throw Error(ErrorCode::NegativeRadicand, "radicand " + std::to_string(radicand) + " < 0");
  }
  return std::sqrt(radicand) - quantization_rhs(branch, n, m, B);
}

RelativisticRoots solve_relativistic_quadratic(Branch branch, double K, double B, double M) {
  require_mass(M);
  // eps^2 - 2 s (B/M) eps - K = 0.
  const double half_b = -relativistic_sign(branch) * B / M;
  const double disc = half_b * half_b + K;
  if (disc < 0.0) {
    throw Error(ErrorCode::ComplexRoots, "discriminant " + std::to_string(disc) + " < 0");
  }
  const double root = std::sqrt(disc);
  // Avoid cancellation: compute the larger-magnitude root first, then use the product -K.
  const double big = half_b <= 0.0 ? -half_b + root : -half_b - root;
  double other = big != 0.0 ? -K / big : 0.0;
  RelativisticRoots out;
  out.plus = std::max(big, other);
  out.minus = std::min(big, other);
  return out;
}

RelativisticRoots energy_rel(Branch branch, int n, int m, double B, double M) {
  require_mass(M);
  const double N = quantization_rhs(Branch::SZero, n, m, B);
  const double K = M * M + N * N - 0.25 - B * B;
  return solve_relativistic_quadratic(branch, K, B, M);
}

double relativistic_shift_term(Branch branch, double eps, double B, double M) {
  return eps * eps - M * M - 2.0 * relativistic_sign(branch) * eps * B / M;
}

double SpectralLine::spectral_term() const {
  if (!relativistic) return 2.0 * energy * M;
  if (!roots) throw Error(ErrorCode::ComplexRoots, "line has no real energies");
  return relativistic_shift_term(branch, roots->plus, B, M);
}

double SpectralLine::primary_energy() const {
  if (!relativistic) return energy;
  if (!roots) throw Error(ErrorCode::ComplexRoots, "line has no real energies");
  return roots->plus;
}

SpectralLine make_line(Branch branch, bool relativistic, int n, int m, double B, double M) {
  require_level(n);
  require_mass(M);
  SpectralLine line;
  line.branch = branch;
  line.relativistic = relativistic;
  line.n = n;
  line.m = m;
  line.B = B;
  line.M = M;
  const Branch eq = line.equation();
  const Exponents e = exponents(eq, m, B);
  line.A = e.A;
  line.C = e.C;
  line.N = quantization_rhs(eq, n, m, B);
  line.alpha = -n;
  line.beta = e.A + e.C + 0.5 + line.N;
  line.gamma = 2.0 * e.C + 1.0;
  line.flags.borderline = e.A == 0.0 || e.C == 0.0;
  if (relativistic) {
    try {
      line.roots = energy_rel(branch, n, m, B, M);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::ComplexRoots) throw;
      line.flags.complex_roots = true;
    }
  } else {
    line.energy = energy_nonrel(branch, n, m, B, M);
    line.flags.negative_energy = line.energy < 0.0;
  }
  return line;
}

std::vector<SpectralLine> enumerate_spectrum(const ParameterSet& p, Branch branch, bool relativistic,
                                             int n_max, int m_min, int m_max) {
  p.validate();
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be non-negative");
  std::vector<SpectralLine> lines;
  for (int m = m_min; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n) lines.push_back(make_line(branch, relativistic, n, m, p.B, p.M));

  auto key = [](const SpectralLine& l) {
    // Lines with complex roots sort last.
    const double e = l.relativistic ? (l.roots ? l.roots->plus : HUGE_VAL) : l.energy;
    return std::make_tuple(e, l.n, l.m);
  };
  std::sort(lines.begin(), lines.end(),
            [&](const SpectralLine& a, const SpectralLine& b) { return key(a) < key(b); });
  return lines;
}

}  // namespace s2dkp
