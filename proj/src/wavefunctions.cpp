#include "s2dkp/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "s2dkp/quadrature.hpp"

namespace s2dkp {

HypergeometricPoly::HypergeometricPoly(int n, double beta, double gamma)
    : n_(n), beta_(beta), gamma_(gamma) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "degree must be non-negative");
  for (int j = 0; j < n; ++j) {
    if (gamma + j == 0.0) {
      throw Error(ErrorCode::GammaPole, "gamma = " + std::to_string(gamma) + " hits a pole");
    }
  }
  coeffs_.resize(n + 1);
  coeffs_[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    const int j = k - 1;
    coeffs_[k] = coeffs_[j] * (-n + j) * (beta + j) / ((gamma + j) * (1.0 + j));
  }
}

double HypergeometricPoly::operator()(double y) const {
  double acc = coeffs_[n_];
  for (int k = n_ - 1; k >= 0; --k) acc = acc * y + coeffs_[k];
  return acc;
}

Jet2 HypergeometricPoly::operator()(const Jet2& y) const {
  Jet2 acc(coeffs_[n_]);
  for (int k = n_ - 1; k >= 0; --k) acc = acc * y + coeffs_[k];
  return acc;
}

namespace {

template <typename S>
S jacobi_series(int n, double a, double b, const S& y) {
  const S x = 1.0 - 2.0 * y;
  if (n == 0) return S(1.0);
  S prev(1.0);
  S cur = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double denom = 2.0 * k * (k + a + b) * (s - 2.0);
    const S next = ((s - 1.0) * (s * (s - 2.0) * x + (a * a - b * b)) * cur -
                    2.0 * (k + a - 1.0) * (k + b - 1.0) * s * prev) / denom;
    prev = cur;
    cur = next;
  }
  // n! / (a+1)_n turns P_n^(a,b) into the F(-n, ...; y) normalization F(0) = 1.
  double scale = 1.0;
  for (int j = 1; j <= n; ++j) scale *= j / (a + j);
  return scale * cur;
}

}  // namespace

double HypergeometricPoly::stable(double y) const {
  const double a = gamma_ - 1.0, b = beta_ - gamma_ - n_;
  if (!(a > -1.0 && b > -1.0)) return (*this)(y);
  return jacobi_series(n_, a, b, y);
}

Jet2 HypergeometricPoly::stable(const Jet2& y) const {
  const double a = gamma_ - 1.0, b = beta_ - gamma_ - n_;
  if (!(a > -1.0 && b > -1.0)) return (*this)(y);
  return jacobi_series(n_, a, b, y);
}

double hyp_eval(const HypergeometricPoly& poly, double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw Error(ErrorCode::InvalidArgument, "y must lie in [0, 1]");
  return poly(y);
}

double RadialProfile::value_y(double y) const {
  const double w = 1.0 - y;
  const double yc = C == 0.0 ? 1.0 : std::pow(y, C);
  const double wa = A == 0.0 ? 1.0 : std::pow(w, A);
  return normalization * yc * wa * poly.stable(y);
}

Jet2 RadialProfile::operator()(const Jet2& r) const {
  const Jet2 half_sin = sin(0.5 * r);
  const Jet2 half_cos = cos(0.5 * r);
  const Jet2 y = half_sin * half_sin;
  const Jet2 w = half_cos * half_cos;
  return normalization * (pow(y, C) * pow(w, A) * poly.stable(y));
}

DualSample<double> RadialProfile::sample(double r) const {
  return DualSample<double>::from_jet(r, (*this)(Jet2::variable(r)));
}

namespace {

// 2 * integral_0^1 f(y) dy, since sin r dr = 2 dy.
double sphere_integral(const std::function<double(double)>& f, const GaussRule& rule) {
  return 2.0 * integrate_unit_interval(f, rule);
}

int node_count(const RadialProfile& p) {
  return p.poly.degree() + static_cast<int>(std::ceil(2.0 * p.A + 2.0 * p.C)) + 4;
}

}  // namespace

RadialProfile build_profile(const SpectralLine& line) {
  if (line.alpha != -line.n) throw Error(ErrorCode::InvalidArgument, "line is not quantized");
  RadialProfile profile;
  profile.A = line.A;
  profile.C = line.C;
  profile.poly = HypergeometricPoly(line.n, line.beta, line.gamma);
  profile.branch = line.equation();
  profile.normalization = 1.0;

  const int q = node_count(profile);
  auto sq = [&](double y) {
    const double v = profile.value_y(y);
    return v * v;
  };
  const double coarse = sphere_integral(sq, gauss_legendre(q));
  const double fine = sphere_integral(sq, gauss_legendre(q + 8));
  if (!std::isfinite(fine) || !(fine > 0.0) || std::abs(fine - coarse) > 1e-10 * fine) {
    throw Error(ErrorCode::NonNormalizable, "norm integral did not converge");
  }
  profile.normalization = 1.0 / std::sqrt(fine);
  return profile;
}

double overlap(const RadialProfile& a, const RadialProfile& b) {
  const int q = std::max(node_count(a), node_count(b)) + 8;
  return sphere_integral([&](double y) { return a.value_y(y) * b.value_y(y); }, gauss_legendre(q));
}

int polynomial_sign_changes(const RadialProfile& profile, int samples) {
  int changes = 0;
  double prev = profile.poly.stable(1.0 / (samples + 1));
  for (int k = 2; k <= samples; ++k) {
    const double cur = profile.poly.stable(double(k) / (samples + 1));
    if (cur == 0.0) continue;
    if ((cur < 0.0) != (prev < 0.0)) ++changes;
    prev = cur;
  }
  return changes;
}

double residual_ode_lambda(const RadialProfile& profile, double lambda, const ParameterSet& p,
                           const std::vector<double>& grid) {
  double worst = 0.0;
  double amplitude = 0.0;
  for (double r : grid) {
    const auto s = profile.sample(r);
    amplitude = std::max(amplitude, std::abs(s.f));
    worst = std::max(worst, std::abs(explicit_operator(p, profile.branch, s) + lambda * s.f));
  }
  return amplitude > 0.0 ? worst / amplitude : worst;
}

double residual_ode(const RadialProfile& profile, double eps, const ParameterSet& p,
                    const std::vector<double>& grid) {
  return residual_ode_lambda(profile, 2.0 * eps * p.M, p, grid);
}

double residual_hypergeometric(const RadialProfile& profile, const Exponents& exps, double lambda,
                               double sigma_b, double B, const std::vector<double>& grid) {
  const double A = profile.A, C = profile.C;
  const double constant = B * B + sigma_b + lambda - (A + C) * (A + C + 1.0);
  const double a_term = 4.0 * A * A - exps.a_arg * exps.a_arg;
  const double c_term = 4.0 * C * C - exps.c_arg * exps.c_arg;
  double worst = 0.0;
  double amplitude = 0.0;
  for (double r : grid) {
    const double y = RadialPoint(r).y();
    const Jet2 f = profile.poly.stable(Jet2::variable(y));
    const double coef = constant + 0.25 * a_term / (1.0 - y) + 0.25 * c_term / y;
    const double res =
        y * (1.0 - y) * f.dd + (2.0 * C + 1.0 - (2.0 * A + 2.0 * C + 2.0) * y) * f.d + coef * f.v;
    amplitude = std::max(amplitude, std::abs(f.v));
    worst = std::max(worst, std::abs(res));
  }
  return amplitude > 0.0 ? worst / amplitude : worst;
}

LineResiduals line_residuals(const SpectralLine& line, const RadialProfile& profile,
                             const std::vector<double>& grid) {
  const ParameterSet p{line.B, line.M, line.m};
  const double lambda = line.spectral_term();
  const Branch eq = line.equation();
  const double sigma_b = branch_sign(eq) * line.B;
  return {residual_ode_lambda(profile, lambda, p, grid),
          residual_hypergeometric(profile, exponents(eq, line.m, line.B), lambda, sigma_b, line.B, grid)};
}

ComponentSet build_simple_relativistic_branch(const SpectralLine& line, double eps) {
  if (!line.relativistic || line.branch != Branch::SZero) {
    throw Error(ErrorCode::InvalidArgument, "simple branch needs a relativistic zero-branch line");
  }
  if (!(line.M > 0.0)) throw Error(ErrorCode::InvalidArgument, "M must be positive");
  const RadialProfile profile = build_profile(line);
  const ParameterSet p{line.B, line.M, line.m};
  const double M = line.M;
  using C = std::complex<double>;
  const C i{0.0, 1.0};

  auto phi2 = [profile](double r) {
    const auto s = profile.sample(r);
    return ComplexSample{r, s.f, s.df, s.ddf, 2};
  };
  auto scaled = [](ComplexSample s, C k) {
    s.f *= k;
    s.df *= k;
    s.ddf *= k;
    return s;
  };

  ComponentSet set = ComponentSet::zero();
  using I = ComponentSet;
  set.components[I::Phi2] = phi2;
  set.components[I::E2] = [=](double r) { return scaled(phi2(r), -i * eps / M); };
  set.components[I::H1] = [=](double r) {
    return scaled(s2dkp::apply(LadderOp{LadderKind::A, p}, phi2(r)), -i / M);
  };
  set.components[I::H3] = [=](double r) {
    return scaled(s2dkp::apply(LadderOp{LadderKind::B, p}, phi2(r)), i / M);
  };
  return set;
}

CouplingDiagonalization diagonalize_coupling(double B, double M, double eps) {
  if (!(M > 0.0)) throw Error(ErrorCode::InvalidArgument, "M must be positive");
  if (eps == 0.0) throw Error(ErrorCode::SingularTransform, "eps = 0 makes S singular");
  const Complex i{0.0, 1.0};
  const double gamma = eps * eps / (M * M);

  CouplingDiagonalization d;
  d.lambda1 = 2.0 * eps * B / M;
  d.lambda2 = -d.lambda1;
  d.A = ComplexMatrix::from_rows({{0.0, 2.0 * i * B}, {-2.0 * i * B * gamma, 0.0}});
  d.S = ComplexMatrix::from_rows({{eps, i * M}, {eps, -i * M}});
  d.S_inv = (1.0 / (-2.0 * i * eps * M)) * ComplexMatrix::from_rows({{-i * M, -i * M}, {-eps, eps}});

  const ComplexMatrix diag = ComplexMatrix::from_rows({{d.lambda1, 0.0}, {0.0, d.lambda2}});
  d.diagonal_deviation = max_abs_diff(d.S * d.A * d.S_inv, diag);
  d.inverse_deviation = max_abs_diff(d.S * d.S_inv, ComplexMatrix::identity(2));
  return d;
}

}  // namespace s2dkp
