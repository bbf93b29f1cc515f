#pragma once

#include <cmath>
#include <complex>

namespace s2dkp {

/**
 * Second-order truncated Taylor number: value, first and second derivative
 * with respect to a single seed variable.
 *
 * Arithmetic propagates both derivatives exactly (up to rounding), which is
 * what the operator-identity checks rely on near the 1/sin^2 singularity.
 */
template <typename T>
struct Jet {
  T v{};
  T d{};
  T dd{};

  constexpr Jet() = default;
  constexpr Jet(T value) : v(value) {}  // NOLINT(google-explicit-constructor)
  constexpr Jet(T value, T first, T second) : v(value), d(first), dd(second) {}

  static constexpr Jet variable(T x) { return Jet(x, T(1), T(0)); }

  constexpr Jet& operator+=(const Jet& o) { v += o.v; d += o.d; dd += o.dd; return *this; }
  constexpr Jet& operator-=(const Jet& o) { v -= o.v; d -= o.d; dd -= o.dd; return *this; }
  constexpr Jet& operator*=(const Jet& o) { return *this = *this * o; }
  constexpr Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend constexpr Jet operator-(const Jet& a) { return {-a.v, -a.d, -a.dd}; }
  friend constexpr Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend constexpr Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend constexpr Jet operator*(const Jet& a, const Jet& b) {
    return {a.v * b.v, a.d * b.v + a.v * b.d, a.dd * b.v + T(2) * a.d * b.d + a.v * b.dd};
  }
  friend constexpr Jet operator/(const Jet& a, const Jet& b) {
    const T q = a.v / b.v;
    const T dq = (a.d - q * b.d) / b.v;
    const T ddq = (a.dd - T(2) * dq * b.d - q * b.dd) / b.v;
    return {q, dq, ddq};
  }
  friend constexpr Jet operator+(const Jet& a, T s) { return {a.v + s, a.d, a.dd}; }
  friend constexpr Jet operator+(T s, const Jet& a) { return a + s; }
  friend constexpr Jet operator-(const Jet& a, T s) { return {a.v - s, a.d, a.dd}; }
  friend constexpr Jet operator-(T s, const Jet& a) { return {s - a.v, -a.d, -a.dd}; }
  friend constexpr Jet operator*(const Jet& a, T s) { return {a.v * s, a.d * s, a.dd * s}; }
  friend constexpr Jet operator*(T s, const Jet& a) { return a * s; }
  friend constexpr Jet operator/(const Jet& a, T s) { return {a.v / s, a.d / s, a.dd / s}; }
};

using Jet2 = Jet<double>;

// Chain rule for an outer function with known value/derivatives g, g', g''.
template <typename T>
constexpr Jet<T> compose(const Jet<T>& x, T g, T dg, T ddg) {
  return {g, dg * x.d, ddg * x.d * x.d + dg * x.dd};
}

inline Jet2 sin(const Jet2& x) {
  const double s = std::sin(x.v), c = std::cos(x.v);
  return compose(x, s, c, -s);
}

inline Jet2 cos(const Jet2& x) {
  const double s = std::sin(x.v), c = std::cos(x.v);
  return compose(x, c, -s, -c);
}

inline Jet2 exp(const Jet2& x) {
  const double e = std::exp(x.v);
  return compose(x, e, e, e);
}

inline Jet2 sqrt(const Jet2& x) {
  const double s = std::sqrt(x.v);
  return compose(x, s, 0.5 / s, -0.25 / (s * x.v));
}

/// x^p for x > 0; p == 0 yields the constant 1 exactly.
inline Jet2 pow(const Jet2& x, double p) {
  if (p == 0.0) return Jet2(1.0);
  const double g = std::pow(x.v, p);
  const double dg = p * std::pow(x.v, p - 1.0);
  const double ddg = p * (p - 1.0) * std::pow(x.v, p - 2.0);
  return compose(x, g, dg, ddg);
}

/// Integer power by repeated multiplication (exact for the polynomial corpus).
inline Jet2 ipow(const Jet2& x, int k) {
  Jet2 out(1.0);
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

}  // namespace s2dkp
