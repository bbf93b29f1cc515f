#include <doctest.h>

#include <cmath>

#include "s2dkp/errors.hpp"
#include "s2dkp/model.hpp"

using namespace s2dkp;

namespace {
bool throws_code(auto&& fn, ErrorCode code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}
}  // namespace

TEST_CASE("nu at the poles and the equator") {
  CHECK(nu({1.0, 1.0, 1}, 0.0) == doctest::Approx(1.0));
  CHECK(nu({1.0, 1.0, 1}, M_PI) == doctest::Approx(3.0));
  CHECK(nu({2.0, 1.0, -1}, M_PI / 2) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("potential values at the equator") {
  CHECK(potential({0.0, 1.0, 1}, Branch::SZero, M_PI / 2) == doctest::Approx(1.0));
  CHECK(potential({0.0, 1.0, 0}, Branch::SPlus, M_PI / 2) == doctest::Approx(1.0));
  // nu = 2, cos = 0: -B + (1 + 0 + 4) / 1
  CHECK(potential({1.0, 1.0, 1}, Branch::SMinus, M_PI / 2) == doctest::Approx(4.0));
  // nu = 2: +B + (1 - 0 + 4)
  CHECK(potential({1.0, 1.0, 1}, Branch::SPlus, M_PI / 2) == doctest::Approx(6.0));
}

TEST_CASE("potential jet agrees with the scalar version and its derivative") {
  const ParameterSet p{0.7, 1.3, -2};
  for (Branch b : kAllBranches) {
    for (double r : {0.3, 1.1, 2.0, 2.9}) {
      const Jet2 v = potential(p, b, Jet2::variable(r));
      CHECK(v.v == doctest::Approx(potential(p, b, r)).epsilon(1e-14));
      const double h = 1e-5;
      const double fd = (potential(p, b, r + h) - potential(p, b, r - h)) / (2 * h);
      CHECK(v.d == doctest::Approx(fd).epsilon(1e-7));
      const double fdd = (potential(p, b, r + h) - 2 * potential(p, b, r) + potential(p, b, r - h)) / (h * h);
      CHECK(v.dd == doctest::Approx(fdd).epsilon(1e-4));
    }
  }
}

TEST_CASE("potential rejects the poles") {
  const ParameterSet p{1.0, 1.0, 1};
  CHECK(throws_code([&] { (void)potential(p, Branch::SZero, 0.0); }, ErrorCode::SingularPoint));
  CHECK(throws_code([&] { (void)potential(p, Branch::SPlus, M_PI); }, ErrorCode::SingularPoint));
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(ParameterSet{-3.0, 0.5, 2}.validate());
  CHECK(throws_code([] { ParameterSet{0.0, 0.0, 0}.validate(); }, ErrorCode::InvalidArgument));
  CHECK(throws_code([] { ParameterSet{0.0, -1.0, 0}.validate(); }, ErrorCode::InvalidArgument));
  CHECK(throws_code([] { ParameterSet{NAN, 1.0, 0}.validate(); }, ErrorCode::InvalidArgument));
}

TEST_CASE("radial point and y coordinate") {
  CHECK(RadialPoint(M_PI / 2).y() == doctest::Approx(0.5));
  CHECK(RadialPoint::from_y(0.25).r() == doctest::Approx(M_PI / 3));
  CHECK(RadialPoint::from_y(0.75).y() == doctest::Approx(0.75));
  CHECK(throws_code([] { RadialPoint(0.0); }, ErrorCode::InvalidArgument));
  CHECK(throws_code([] { RadialPoint::from_y(1.0); }, ErrorCode::InvalidArgument));
}

TEST_CASE("branch names round-trip") {
  for (Branch b : kAllBranches) CHECK(parse_branch(to_string(b)) == b);
  CHECK_FALSE(parse_branch("sideways").has_value());
  CHECK(branch_sign(Branch::SPlus) == 1);
  CHECK(branch_sign(Branch::SMinus) == -1);
}

TEST_CASE("error codes have stable names") {
  CHECK(to_string(ErrorCode::InvalidBoundary) == std::string("INVALID_BOUNDARY"));
  CHECK(to_string(ErrorCode::MalformedConfig) == std::string("MALFORMED_CONFIG"));
  CHECK(to_string(ErrorCode::SingularPoint) == std::string("SINGULAR_POINT"));
}
