#include "s2dkp/model.hpp"

#include <cmath>
#include <string>

namespace s2dkp {

void ParameterSet::validate() const {
  if (!std::isfinite(B)) throw Error(ErrorCode::InvalidArgument, "B must be finite");
  if (!(M > 0.0) || !std::isfinite(M)) {
    throw Error(ErrorCode::InvalidArgument, "M must be positive, got " + std::to_string(M));
  }
}

std::optional<Branch> parse_branch(std::string_view text) {
  if (text == "plus") return Branch::SPlus;
  if (text == "zero") return Branch::SZero;
  if (text == "minus") return Branch::SMinus;
  return std::nullopt;
}

RadialPoint::RadialPoint(double r) : r_(r) {
  if (!(r > 0.0 && r < M_PI)) {
    throw Error(ErrorCode::InvalidArgument, "radial point must lie in (0, pi)");
  }
  const double half = std::sin(0.5 * r);
  y_ = half * half;
}

RadialPoint RadialPoint::from_y(double y) {
  if (!(y > 0.0 && y < 1.0)) throw Error(ErrorCode::InvalidArgument, "y must lie in (0, 1)");
  return RadialPoint(std::acos(1.0 - 2.0 * y));
}

namespace {

template <typename S>
S potential_impl(const ParameterSet& p, Branch branch, const S& r) {
  using std::cos;
  using std::sin;
  const S s = sin(r);
  const S c = cos(r);
  const S v = nu(p, r);
  const S s2 = s * s;
  switch (branch) {
    case Branch::SZero:
      return v * v / s2;
    case Branch::SPlus:
      return p.B + (1.0 - 2.0 * v * c + v * v) / s2;
    case Branch::SMinus:
      return -p.B + (1.0 + 2.0 * v * c + v * v) / s2;
  }
  return S(0.0);
}

void check_regular(double r) {
  if (std::abs(std::sin(r)) < kSingularThreshold) {
    throw Error(ErrorCode::SingularPoint, "sin r underflows at r = " + std::to_string(r));
  }
}

}  // namespace

double potential(const ParameterSet& p, Branch branch, double r) {
  check_regular(r);
  return potential_impl(p, branch, r);
}

Jet2 potential(const ParameterSet& p, Branch branch, const Jet2& r) {
  check_regular(r.v);
  return potential_impl(p, branch, r);
}

}  // namespace s2dkp
