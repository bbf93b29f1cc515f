#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "s2dkp/errors.hpp"
#include "s2dkp/jet.hpp"

namespace s2dkp {

/// Physical inputs in natural units (hbar = c = 1, sphere radius 1).
struct ParameterSet {
  double B = 0.0;  // magnetic field strength, any real
  double M = 1.0;  // mass, > 0
  int m = 0;       // magnetic quantum number

  /// Throws InvalidArgument unless M is a positive finite number and B is finite.
  void validate() const;
};

/**
 * Spin-projection component of the nonrelativistic radial system.
 *
 * SPlus, SZero and SMinus are the psi_1, psi_2, psi_3 equations. In
 * relativistic use the same tags select the energy shift applied to the
 * Laplacian-type equation: SPlus takes eps^2 - M^2 - 2 eps B / M, SZero
 * takes eps^2 - M^2, SMinus takes eps^2 - M^2 + 2 eps B / M.
 */
enum class Branch { SPlus, SZero, SMinus };

inline constexpr std::array<Branch, 3> kAllBranches{Branch::SPlus, Branch::SZero, Branch::SMinus};

/// +1, 0, -1 for SPlus, SZero, SMinus.
constexpr int branch_sign(Branch b) {
  switch (b) {
    case Branch::SPlus: return 1;
    case Branch::SZero: return 0;
    case Branch::SMinus: return -1;
  }
  return 0;
}

constexpr std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::SPlus: return "plus";
    case Branch::SZero: return "zero";
    case Branch::SMinus: return "minus";
  }
  return "?";
}

std::optional<Branch> parse_branch(std::string_view text);

/// Radial coordinate r in (0, pi) with y = (1 - cos r) / 2.
class RadialPoint {
 public:
  explicit RadialPoint(double r);
  static RadialPoint from_y(double y);

  double r() const { return r_; }
  double y() const { return y_; }

 private:
  double r_;
  double y_;
};

/// sin r below this is treated as an endpoint.
inline constexpr double kSingularThreshold = 1e-12;

/// nu(r) = m + B (1 - cos r).
inline double nu(const ParameterSet& p, double r) {
  return p.m + p.B * (1.0 - std::cos(r));
}

inline Jet2 nu(const ParameterSet& p, const Jet2& r) {
  return double(p.m) + p.B * (1.0 - cos(r));
}

/**
 * Potential V(r) in psi'' + cot r psi' - V psi + 2 eps M psi = 0:
 *
 *   SPlus:  V = +B + (1 - 2 nu cos r + nu^2) / sin^2 r
 *   SZero:  V = nu^2 / sin^2 r
 *   SMinus: V = -B + (1 + 2 nu cos r + nu^2) / sin^2 r
 *
 * Throws SingularPoint when sin r < kSingularThreshold.
 */
double potential(const ParameterSet& p, Branch branch, double r);
Jet2 potential(const ParameterSet& p, Branch branch, const Jet2& r);

}  // namespace s2dkp
