#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "s2dkp/quadrature.hpp"

TEST_CASE("characteristic polynomial of a 2x2") {
  const auto c = oracle::char_poly({2.0, 2.0}, {-1.0});
  REQUIRE(c.size() == 3);
  CHECK(c[0] == doctest::Approx(3.0));
  CHECK(c[1] == doctest::Approx(-4.0));
  CHECK(c[2] == doctest::Approx(1.0));
}

TEST_CASE("polynomial roots of the discrete Laplacian") {
  const auto r = oracle::char_poly_roots({2, 2, 2, 2, 2}, {-1, -1, -1, -1});
  REQUIRE(r.size() == 5);
  for (int k = 1; k <= 5; ++k) CHECK(r[k - 1] == doctest::Approx(2 - 2 * std::cos(k * M_PI / 6)).epsilon(1e-13));
}

TEST_CASE("normalized Legendre reference has unit norm") {
  const auto rule = s2dkp::gauss_legendre(40);
  for (int l = 0; l <= 5; ++l)
    for (int m = 0; m <= l; ++m) {
      double sum = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = 0.5 * M_PI * (rule.nodes[i] + 1.0);
        const double f = oracle::normalized_assoc_legendre(l, m, r);
        sum += 0.5 * M_PI * rule.weights[i] * f * f * std::sin(r);
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  const auto rule = s2dkp::gauss_legendre(6);
  double w = 0.0, x10 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    w += rule.weights[i];
    x10 += rule.weights[i] * std::pow(rule.nodes[i], 10);
  }
  CHECK(w == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(x10 == doctest::Approx(2.0 / 11.0).epsilon(1e-14));
  CHECK(s2dkp::integrate_unit_interval([](double y) { return std::sqrt(y); }, s2dkp::gauss_legendre(12)) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-13));
}
