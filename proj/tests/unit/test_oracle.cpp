#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "s2dkp/errors.hpp"
#include "s2dkp/oracle.hpp"

using namespace s2dkp;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

const std::vector<int> kGrids{1000, 2000, 4000};

}  // namespace

TEST_CASE("discretized operator shape and signs") {
  const auto op = discretize({0.0, 1.0, 1}, Branch::SZero, 16);
  CHECK(op.N == 16);
  CHECK(op.h == doctest::Approx(M_PI / 16));
  REQUIRE(op.matrix.size() == 15);
  REQUIRE(op.matrix.off.size() == 14);
  for (double d : op.matrix.diag) CHECK(d > 0.0);
  for (double o : op.matrix.off) CHECK(o < 0.0);
}

TEST_CASE("discretize preconditions") {
  CHECK(code_of([] { (void)discretize({0.0, 1.0, 1}, Branch::SZero, 15); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { (void)discretize({0.0, 1.0, 0}, Branch::SZero, 64); }) == ErrorCode::InvalidBoundary);
  CHECK(code_of([] { (void)discretize({1.0, 1.0, 1}, Branch::SPlus, 64); }) == ErrorCode::InvalidBoundary);
}

TEST_CASE("raw eigenvalues follow l(l+1) for m = 1") {
  const auto op = discretize({0.0, 1.0, 1}, Branch::SZero, 2000);
  const auto ev = lowest_eigenvalues(op.matrix, 3);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(ev[i] - oracle::legendre_level(i + 1)) <= 1e-4);
}

TEST_CASE("second-order convergence") {
  const double exact = oracle::legendre_level(2);
  double prev = 0.0;
  for (int N : {200, 400, 800}) {
    const auto ev = lowest_eigenvalues(discretize({0.0, 1.0, 1}, Branch::SZero, N).matrix, 2);
    const double err = std::abs(ev[1] - exact);
    if (prev > 0.0) CHECK(prev / err == doctest::Approx(4.0).epsilon(0.1));
    prev = err;
  }
}

TEST_CASE("Richardson removes h^2 and h^4") {
  auto seq = [](double h) { return 5.0 + 3.0 * h * h - 7.0 * std::pow(h, 4); };
  CHECK(richardson(seq(0.1), seq(0.05), seq(0.025)) == doctest::Approx(5.0).epsilon(1e-13));
  auto pure = [](double h) { return 1.0 + h * h; };
  CHECK(observed_order(pure(0.1), pure(0.05), pure(0.025)) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("grid validation") {
  CHECK_NOTHROW(validate_grids({16, 32, 64}));
  CHECK_THROWS_AS(validate_grids({1000, 2000}), Error);
  CHECK_THROWS_AS(validate_grids({1000, 2000, 3000}), Error);
  CHECK_THROWS_AS(validate_grids({8, 16, 32}), Error);
}

TEST_CASE("closed form against the oracle") {
  SUBCASE("zero branch, m = 1, B = 0") {
    const auto c = compare(make_line(Branch::SZero, false, 0, 1, 0.0, 1.0), kGrids);
    CHECK(c.closed_form == doctest::Approx(2.0));
    CHECK(c.abs_err <= 1e-6);
    CHECK(c.convergence_order == doctest::Approx(2.0).epsilon(0.1));
  }
  SUBCASE("plus branch with a bounded endpoint is excluded") {
    const auto line = make_line(Branch::SPlus, false, 0, 1, 1.0, 1.0);
    CHECK_FALSE(oracle_admissible(line));
    CHECK(code_of([&] { (void)compare(line, kGrids); }) == ErrorCode::InvalidBoundary);
  }
  SUBCASE("plus branch, m = 2, B = 1") {
    const auto line = make_line(Branch::SPlus, false, 1, 2, 1.0, 1.0);
    REQUIRE(oracle_admissible(line));
    CHECK(compare(line, kGrids).abs_err <= 1e-6);
  }
  SUBCASE("relativistic shifts") {
    for (Branch b : kAllBranches) {
      const auto line = make_line(b, true, 1, 1, 0.5, 1.0);
      const auto c = compare(line, kGrids);
      CHECK(c.closed_form == doctest::Approx(line.roots->plus * line.roots->plus - 1.0 -
                                             2.0 * branch_sign(b) * line.roots->plus * 0.5));
      CHECK(c.abs_err <= 1e-6);
    }
  }
}

TEST_CASE("sector solve returns increasing eigenvalues with error estimates") {
  const auto res = solve_sector({0.5, 1.0, 2}, Branch::SMinus, kGrids, 4);
  REQUIRE(res.eigenvalues.size() == 4);
  for (std::size_t i = 1; i < 4; ++i) CHECK(res.eigenvalues[i] > res.eigenvalues[i - 1]);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(res.estimated_error[i] < 1e-6);
    CHECK(res.convergence_order[i] == doctest::Approx(2.0).epsilon(0.1));
  }
}
