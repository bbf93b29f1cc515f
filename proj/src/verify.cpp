#include "s2dkp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "s2dkp/algebra.hpp"
#include "s2dkp/ladder.hpp"
#include "s2dkp/oracle.hpp"
#include "s2dkp/spectra.hpp"
#include "s2dkp/wavefunctions.hpp"

namespace s2dkp {

namespace {

CheckResult make_check(const std::string& suite, const std::string& name, double value, double tol,
                       const VerifyOptions& o) {
  const double t = o.tolerance.value_or(tol);
  return {suite, name, value, t, std::isfinite(value) && value <= t, {}};
}

std::string tag(Branch b, bool rel, int m) {
  return std::string(to_string(b)) + (rel ? "/rel" : "") + "/m=" + std::to_string(m);
}

std::vector<CheckResult> algebra_suite(const VerifyOptions& o) {
  const auto basis = build_basis();
  return {make_check("algebra", "j12_deviation", verify_j12(basis), 1e-12, o),
          make_check("algebra", "tau_commutator_deviation", verify_tau_algebra(basis).max(), 1e-12, o)};
}

std::vector<CheckResult> identities_suite(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const auto grid = chebyshev_grid();
  for (int m = o.m_min; m <= o.m_max; ++m) {
    const ParameterSet p{o.B, o.M, m};
    auto functions = test_function_corpus(m);
    for (auto& f : random_test_functions(m, o.seed + m, 4)) functions.push_back(std::move(f));
    const IdentityReport rep = check_identities(p, functions, grid);
    out.push_back(make_check("identities", "laplacian/m=" + std::to_string(m), rep.delta_laplacian, 1e-10, o));
    auto shift = make_check("identities", "shift_constancy/m=" + std::to_string(m), rep.shift_spread, 1e-10, o);
    shift.info = {{"measured_constant", rep.shift_constant}, {"B", rep.B}, {"two_B", rep.two_B},
                  {"matches_B", std::abs(rep.shift_constant - rep.B) <= 1e-10 ? 1.0 : 0.0},
                  {"matches_2B", std::abs(rep.shift_constant - rep.two_B) <= 1e-10 ? 1.0 : 0.0}};
    out.push_back(shift);
  }
  return out;
}

std::vector<CheckResult> composition_suite(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const auto grid = chebyshev_grid();
  for (int m = o.m_min; m <= o.m_max; ++m) {
    const ParameterSet p{o.B, o.M, m};
    auto functions = test_function_corpus(m);
    for (auto& f : random_test_functions(m, o.seed + 7 * m, 4)) functions.push_back(std::move(f));
    out.push_back(make_check("composition", "pauli_vs_explicit/m=" + std::to_string(m),
                             composition_deviation(p, functions, grid), 1e-10, o));
  }
  return out;
}

std::vector<CheckResult> spectra_suite(const VerifyOptions& o) {
  double back_sub = 0.0, symmetry = 0.0, rel_quadratic = 0.0, flat = 0.0;
  for (int m = o.m_min; m <= o.m_max; ++m)
    for (int n = 0; n <= o.residual_n_max; ++n) {
      for (Branch b : kAllBranches) {
        const double eps = energy_nonrel(b, n, m, o.B, o.M);
        back_sub = std::max(back_sub, std::abs(nonrel_condition_residual(b, n, m, o.B, o.M, eps)) /
                                          quantization_rhs(b, n, m, o.B));
        const auto roots = energy_rel(b, n, m, o.B, o.M);
        const double N = quantization_rhs(Branch::SZero, n, m, o.B);
        const double K = N * N - 0.25 - o.B * o.B;
        for (double e : {roots.plus, roots.minus}) {
          rel_quadratic = std::max(rel_quadratic,
                                   std::abs(relativistic_shift_term(b, e, o.B, o.M) - K) / (o.M * o.M + K));
        }
      }
      const double plus = energy_nonrel(Branch::SPlus, n, m, o.B, o.M);
      const double minus = energy_nonrel(Branch::SMinus, n, -m, -o.B, o.M);
      symmetry = std::max(symmetry, std::abs(plus - minus) / std::max(1.0, std::abs(plus)));
      const int l = n + std::abs(m);
      const double zero_flat = energy_nonrel(Branch::SZero, n, m, 0.0, o.M);
      flat = std::max(flat, std::abs(zero_flat - l * (l + 1.0) / (2.0 * o.M)));
    }
  return {make_check("spectra", "back_substitution", back_sub, 1e-12, o),
          make_check("spectra", "plus_minus_symmetry", symmetry, 1e-12, o),
          make_check("spectra", "relativistic_quadratic", rel_quadratic, 1e-12, o),
          make_check("spectra", "flat_limit_legendre", flat, 1e-12, o)};
}

std::vector<CheckResult> residuals_suite(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const auto grid = chebyshev_grid();
  for (bool rel : {false, true})
    for (Branch b : kAllBranches)
      for (int m = o.m_min; m <= o.m_max; ++m) {
        double r_form = 0.0, y_form = 0.0, ortho = 0.0, node_mismatch = 0.0;
        std::vector<RadialProfile> profiles;
        for (int n = 0; n <= o.residual_n_max; ++n) {
          const auto line = make_line(b, rel, n, m, o.B, o.M);
          if (line.flags.complex_roots) continue;
          profiles.push_back(build_profile(line));
          const auto res = line_residuals(line, profiles.back(), grid);
          r_form = std::max(r_form, res.r_form);
          y_form = std::max(y_form, res.y_form);
          node_mismatch = std::max(node_mismatch, double(std::abs(polynomial_sign_changes(profiles.back()) - n)));
        }
        for (std::size_t i = 0; i < profiles.size(); ++i)
          for (std::size_t j = i + 1; j < profiles.size(); ++j)
            ortho = std::max(ortho, std::abs(overlap(profiles[i], profiles[j])));
        const std::string t = tag(b, rel, m);
        out.push_back(make_check("residuals", "r_form/" + t, r_form, 1e-10, o));
        out.push_back(make_check("residuals", "y_form/" + t, y_form, 1e-10, o));
        out.push_back(make_check("residuals", "orthogonality/" + t, ortho, 1e-8, o));
        out.push_back(make_check("residuals", "node_count_mismatch/" + t, node_mismatch, 0.0, o));
      }
  return out;
}

std::vector<CheckResult> diagonalization_suite(const VerifyOptions& o) {
  double diag = 0.0, inverse = 0.0;
  for (int m = o.m_min; m <= o.m_max; ++m)
    for (int n = 0; n <= o.n_max; ++n) {
      const auto roots = energy_rel(Branch::SZero, n, m, o.B, o.M);
      for (double eps : {roots.plus, roots.minus}) {
        const auto d = diagonalize_coupling(o.B, o.M, eps);
        const double scale = std::max(1.0, std::abs(d.lambda1));
        diag = std::max(diag, d.diagonal_deviation / scale);
        inverse = std::max(inverse, d.inverse_deviation);
      }
    }
  return {make_check("diagonalization", "similarity_diagonal", diag, 1e-12, o),
          make_check("diagonalization", "inverse", inverse, 1e-12, o)};
}

std::vector<CheckResult> first_order_suite(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const auto grid = chebyshev_grid();
  for (int m = o.m_min; m <= o.m_max; ++m) {
    double worst = 0.0;
    for (int n = 0; n <= o.n_max; ++n) {
      const auto line = make_line(Branch::SZero, true, n, m, o.B, o.M);
      for (double eps : {line.roots->plus, line.roots->minus}) {
        const auto solution = build_simple_relativistic_branch(line, eps);
        worst = std::max(worst, verify_first_order_system(solution, eps, {o.B, o.M, m}, grid));
      }
    }
    out.push_back(make_check("first-order", "simple_branch/m=" + std::to_string(m), worst, 1e-8, o));
  }
  return out;
}

std::vector<CheckResult> oracle_suite(const VerifyOptions& o) {
  struct Job {
    Branch branch;
    bool rel;
    int m;
  };
  std::vector<Job> jobs;
  for (bool rel : {false, true})
    for (Branch b : kAllBranches)
      for (int m = o.m_min; m <= o.m_max; ++m) {
        if (!oracle_admissible(make_line(b, rel, 0, m, o.B, o.M))) continue;
        jobs.push_back({b, rel, m});
      }

  std::vector<std::future<CheckResult>> futures;
  for (const Job& job : jobs) {
    futures.push_back(std::async(std::launch::async, [job, &o] {
      const auto line0 = make_line(job.branch, job.rel, 0, job.m, o.B, o.M);
      const auto sector = solve_sector({o.B, o.M, job.m}, line0.equation(), o.grids, o.n_max + 1);
      double worst = 0.0, order_lo = HUGE_VAL, order_hi = -HUGE_VAL;
      for (int n = 0; n <= o.n_max; ++n) {
        const auto line = make_line(job.branch, job.rel, n, job.m, o.B, o.M);
        worst = std::max(worst, std::abs(line.spectral_term() - sector.eigenvalues[n]));
        order_lo = std::min(order_lo, sector.convergence_order[n]);
        order_hi = std::max(order_hi, sector.convergence_order[n]);
      }
      auto check = make_check("oracle", "closed_form_vs_fd/" + tag(job.branch, job.rel, job.m), worst, 1e-6, o);
      check.info = {{"min_convergence_order", order_lo}, {"max_convergence_order", order_hi}};
      return check;
    }));
  }
  std::vector<CheckResult> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "algebra") return algebra_suite(options);
  if (name == "identities") return identities_suite(options);
  if (name == "composition") return composition_suite(options);
  if (name == "spectra") return spectra_suite(options);
  if (name == "residuals") return residuals_suite(options);
  if (name == "diagonalization") return diagonalization_suite(options);
  if (name == "first-order") return first_order_suite(options);
  if (name == "oracle") return oracle_suite(options);
  throw Error(ErrorCode::InvalidArgument, "unknown verification suite '" + name + "'");
}

std::vector<CheckResult> run_all_suites(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (const auto& name : verify_suite_names()) {
    auto part = run_suite(name, options);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace s2dkp
