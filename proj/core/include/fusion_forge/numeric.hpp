#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace fusion_forge {

using Complex = std::complex<double>;

/// Numerical tolerances shared by the validators and the integer snapping.
struct Tolerances {
  /// Identity checks on cocycle tables and projective-representation laws.
  double validation = 1e-9;
  /// Distance to the nearest integer accepted for a multiplicity.
  double integrality = 1e-6;
};

/// exp(2 pi i num / den).
inline Complex root_of_unity(std::int64_t num, std::int64_t den) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) /
                       static_cast<double>(den);
  // Snap the common exact cases so products of tabulated values stay clean.
  const std::int64_t r = ((num % den) + den) % den;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == den) return {-1.0, 0.0};
  if (4 * r == den) return {0.0, 1.0};
  if (4 * r == 3 * den) return {0.0, -1.0};
  return std::polar(1.0, angle);
}

inline bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

/// Rational angle num/den in [0,1) with den <= max_den such that
/// exp(2 pi i num/den) matches z, if one exists.
struct RationalAngle {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

bool to_rational_angle(Complex z, RationalAngle& out, std::int64_t max_den = 1 << 12,
                       double tol = 1e-9);

}  // namespace fusion_forge
