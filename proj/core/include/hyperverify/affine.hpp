#pragma once

namespace hyperverify {

// coeff * d + constant. Every parameter in the identity chain has this shape.
struct Affine {
  double coeff = 0.0;
  double constant = 0.0;

  constexpr Affine() = default;
  constexpr Affine(double c) : coeff(0.0), constant(c) {}  // NOLINT(google-explicit-constructor)
  constexpr Affine(double k, double c) : coeff(k), constant(c) {}

  constexpr double at(double d) const { return coeff * d + constant; }
};

// The variable d itself, so that `2 - 2 * D` reads like the formula.
inline constexpr Affine D{1.0, 0.0};

constexpr Affine operator+(Affine a, Affine b) { return {a.coeff + b.coeff, a.constant + b.constant}; }
constexpr Affine operator-(Affine a, Affine b) { return {a.coeff - b.coeff, a.constant - b.constant}; }
constexpr Affine operator-(Affine a) { return {-a.coeff, -a.constant}; }
constexpr Affine operator*(double k, Affine a) { return {k * a.coeff, k * a.constant}; }
constexpr Affine operator*(Affine a, double k) { return k * a; }

}  // namespace hyperverify
