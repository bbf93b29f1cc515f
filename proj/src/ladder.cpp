#include "s2dkp/ladder.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

namespace s2dkp {

int LadderOp::derivative_sign() const {
  switch (kind) {
    case LadderKind::A:
    case LadderKind::APlus:
    case LadderKind::AMinus: return 1;
    default: return -1;
  }
}

int LadderOp::cos_shift() const {
  switch (kind) {
    case LadderKind::APlus:
    case LadderKind::BPlus: return 1;
    case LadderKind::AMinus:
    case LadderKind::BMinus: return -1;
    default: return 0;
  }
}

Jet2 LadderOp::coefficient(double r) const {
  const Jet2 x = Jet2::variable(r);
  return (nu(params, x) + double(cos_shift()) * cos(x)) / sin(x);
}

void require_regular_point(double r) {
  if (!(r > 0.0 && r < M_PI) || std::abs(std::sin(r)) < kSingularThreshold) {
    throw Error(ErrorCode::SingularPoint, "operator evaluated at r = " + std::to_string(r));
  }
}

double pauli_operator(const ParameterSet& p, Branch branch, const DualSample<double>& s) {
  const LadderOp a{LadderKind::A, p}, a_plus{LadderKind::APlus, p};
  const LadderOp b{LadderKind::B, p}, b_minus{LadderKind::BMinus, p};
  switch (branch) {
    case Branch::SPlus: return -2.0 * compose2(a, b_minus, s);
    case Branch::SZero: return -compose2(b_minus, a, s) - compose2(a_plus, b, s);
    case Branch::SMinus: return -2.0 * compose2(b, a_plus, s);
  }
  return 0.0;
}

double shift_operator(const ParameterSet& p, const DualSample<double>& s) {
  const LadderOp a{LadderKind::A, p}, a_plus{LadderKind::APlus, p};
  const LadderOp b{LadderKind::B, p}, b_minus{LadderKind::BMinus, p};
  return -compose2(b_minus, a, s) + compose2(a_plus, b, s);
}

std::vector<TestFunction> test_function_corpus(int m) {
  const int k = std::abs(m);
  return {
      {"1", [](const Jet2&) { return Jet2(1.0); }},
      {"sin r", [](const Jet2& r) { return sin(r); }},
      {"sin^2 r", [](const Jet2& r) { return sin(r) * sin(r); }},
      {"cos r sin r", [](const Jet2& r) { return cos(r) * sin(r); }},
      {"sin^" + std::to_string(k) + " r", [k](const Jet2& r) { return ipow(sin(r), k); }},
  };
}

std::vector<TestFunction> random_test_functions(int m, unsigned long long seed, int count) {
  const auto corpus = test_function_corpus(m);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<TestFunction> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<double> w(corpus.size());
    for (auto& x : w) x = coef(rng);
    out.push_back({"random#" + std::to_string(i), [corpus, w](const Jet2& r) {
                     Jet2 acc(0.0);
                     for (std::size_t j = 0; j < corpus.size(); ++j) acc += w[j] * corpus[j].f(r);
                     return acc;
                   }});
  }
  return out;
}

std::vector<double> chebyshev_grid(int count, double lo, double hi) {
  std::vector<double> grid(count);
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int k = 0; k < count; ++k) {
    // Reverse the index so the grid increases with k.
    grid[k] = mid - half * std::cos((2.0 * k + 1.0) * M_PI / (2.0 * count));
  }
  return grid;
}

IdentityReport check_identities(const ParameterSet& p, const std::vector<TestFunction>& functions,
                                const std::vector<double>& grid, double constant_tolerance) {
  IdentityReport report;
  report.B = p.B;
  report.two_B = 2.0 * p.B;

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  int count = 0;
  for (const auto& fn : functions) {
    double fmax = 0.0;
    std::vector<DualSample<double>> samples;
    samples.reserve(grid.size());
    for (double r : grid) {
      samples.push_back(sample(fn.f, r));
      fmax = std::max(fmax, std::abs(samples.back().f));
    }
    for (const auto& s : samples) {
      const double lhs = pauli_operator(p, Branch::SZero, s);
      const double rhs = explicit_operator(p, Branch::SZero, s);
      report.delta_laplacian = std::max(report.delta_laplacian, std::abs(lhs - rhs));
      if (std::abs(s.f) <= 1e-8 * fmax) continue;
      const double ratio = shift_operator(p, s) / s.f;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      sum += ratio;
      ++count;
    }
  }
  if (count > 0) {
    report.shift_constant = sum / count;
    report.shift_spread = (hi - lo) / std::max(1.0, std::abs(report.shift_constant));
  }
  report.shift_is_constant = count > 0 && report.shift_spread <= constant_tolerance;
  return report;
}

double composition_deviation(const ParameterSet& p, const std::vector<TestFunction>& functions,
                             const std::vector<double>& grid) {
  double worst = 0.0;
  for (const auto& fn : functions)
    for (double r : grid) {
      const auto s = sample(fn.f, r);
      for (Branch b : kAllBranches) {
        worst = std::max(worst, std::abs(pauli_operator(p, b, s) - explicit_operator(p, b, s)));
      }
    }
  return worst;
}

ComponentSet ComponentSet::zero() {
  ComponentSet set;
  for (auto& c : set.components) c = [](double r) { return ComplexSample{r, {}, {}, {}, 2}; };
  return set;
}

double verify_first_order_system(const ComponentSet& solution, double eps, const ParameterSet& p,
                                 const std::vector<double>& grid) {
  using C = std::complex<double>;
  const C i{0.0, 1.0};
  const double M = p.M;
  const LadderOp a{LadderKind::A, p}, a_plus{LadderKind::APlus, p};
  const LadderOp b{LadderKind::B, p}, b_minus{LadderKind::BMinus, p};

  double worst = 0.0;
  for (double r : grid) {
    require_regular_point(r);
    std::array<ComplexSample, ComponentSet::kCount> s;
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = solution.components[k](r);
    auto f = [&](ComponentSet::Index k) { return s[k].f; };
    auto op = [&](const LadderOp& o, ComponentSet::Index k) { return s2dkp::apply(o, s[k]).f; };
    using I = ComponentSet;

    const std::array<C, 10> residuals{
        // Phi-equations.
        -op(b_minus, I::E1) - op(a_plus, I::E3) - M * f(I::Phi0),
        -i * op(b_minus, I::H1) + i * op(a_plus, I::H3) + i * eps * f(I::E2) - M * f(I::Phi2),
        i * op(a, I::H2) + i * eps * f(I::E1) - M * f(I::Phi1),
        -i * op(b, I::H2) + i * eps * f(I::E3) - M * f(I::Phi3),
        // E- and H-equations.
        op(a, I::Phi0) - i * eps * f(I::Phi1) - M * f(I::E1),
        -i * op(a, I::Phi2) - M * f(I::H1),
        op(b, I::Phi0) - i * eps * f(I::Phi3) - M * f(I::E3),
        i * op(b, I::Phi2) - M * f(I::H3),
        -i * eps * f(I::Phi2) - M * f(I::E2),
        i * op(b_minus, I::Phi1) - i * op(a_plus, I::Phi3) - M * f(I::H2),
    };
    for (const auto& res : residuals) worst = std::max(worst, std::abs(res));
  }
  return worst;
}

}  // namespace s2dkp
