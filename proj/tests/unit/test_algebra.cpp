#include <doctest.h>

#include <cmath>

#include "s2dkp/algebra.hpp"
#include "s2dkp/errors.hpp"

using namespace s2dkp;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("tau3 is the diagonal spin projection") {
  const auto b = build_basis();
  const auto expected = ComplexMatrix::from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}});
  CHECK(max_abs_diff(b.tau3, expected) == 0.0);
}

TEST_CASE("e2 row") {
  const auto b = build_basis();
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(b.e2, ComplexMatrix::from_rows({{s, 0, s}})) < 1e-16);
}

TEST_CASE("beta0 squared is the identity on the Phi and E blocks") {
  const auto b = build_basis();
  const auto sq = b.beta0 * b.beta0;
  ComplexMatrix expected(10, 10);
  for (std::size_t i = 1; i < 7; ++i) expected(i, i) = 1.0;
  CHECK(max_abs_diff(sq, expected) == 0.0);
}

TEST_CASE("commutator basics") {
  const auto b = build_basis();
  CHECK(max_abs_diff(commutator(ComplexMatrix::identity(10), b.beta1), ComplexMatrix(10, 10)) == 0.0);
  CHECK(max_abs_diff(commutator(b.tau1, b.tau2), I * b.tau3) < 1e-15);
  CHECK(max_abs_diff(commutator(b.beta1, b.beta2), -I * spin_projection_s3(b)) < 1e-15);
}

TEST_CASE("spin algebra closes") {
  const auto b = build_basis();
  const auto dev = verify_tau_algebra(b);
  CHECK(dev.max() < 1e-15);
  CHECK(verify_j12(b) <= 1e-12);
}

TEST_CASE("perturbing beta1 shows up linearly in the j12 deviation") {
  auto b = build_basis();
  const double delta = 1e-3;
  b.beta1(0, 4) += delta;
  const double dev = verify_j12(b);
  CHECK(dev > 0.1 * delta);
  CHECK(dev < 10.0 * delta);
}

TEST_CASE("Duffin-Kemmer relation with metric diag(1,-1,-1,-1)") {
  const auto b = build_basis();
  const double g[4] = {1, -1, -1, -1};
  double worst = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int l = 0; l < 4; ++l) {
        const auto lhs = b.beta(m) * b.beta(n) * b.beta(l) + b.beta(l) * b.beta(n) * b.beta(m);
        ComplexMatrix rhs(10, 10);
        if (n == l) rhs = rhs + Complex(g[n]) * b.beta(m);
        if (n == m) rhs = rhs + Complex(g[n]) * b.beta(l);
        worst = std::max(worst, max_abs_diff(lhs, rhs));
      }
  CHECK(worst < 1e-14);
}

TEST_CASE("beta0 is Hermitian and the spatial betas anti-Hermitian") {
  const auto b = build_basis();
  CHECK(max_abs_diff(b.beta0.adjoint(), b.beta0) == 0.0);
  for (int i = 1; i <= 3; ++i) CHECK(max_abs_diff(b.beta(i).adjoint(), Complex(-1.0) * b.beta(i)) == 0.0);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(max_abs_diff(ComplexMatrix(2, 2), ComplexMatrix(3, 3)), Error);
  CHECK_THROWS_AS(commutator(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), Error);
  try {
    (void)commutator(ComplexMatrix(2, 2), ComplexMatrix(3, 3));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
  CHECK_THROWS_AS(build_basis().beta(4), Error);
}
