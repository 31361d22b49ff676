#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperverify/affine.hpp"
#include "hyperverify/eval_result.hpp"

namespace hyperverify {

// Arguments within this distance of a non-positive integer are treated as poles.
inline constexpr double kPoleSnap = 1e-9;

struct SignedLog {
  double log_magnitude = 0.0;
  int sign = 1;  // +1, -1, or 0 for an exact zero

  static SignedLog zero() { return {0.0, 0}; }
  static SignedLog from(double x);
  double value() const;
};

SignedLog operator*(SignedLog a, SignedLog b);
SignedLog operator/(SignedLog a, SignedLog b);

// Returns the non-positive integer n when x is within kPoleSnap of it.
std::optional<int> nonpositive_integer(double x, double snap = kPoleSnap);

// sin(pi x) with exact argument reduction.
double sin_pi(double x);

SignedLog ln_gamma_signed(double x);
double pochhammer(double a, std::size_t k);
double digamma(double x);

// Gamma factors and plain factors, all affine in d:
//   scale * prod Gamma(num) / prod Gamma(den) * prod factor / prod divisor.
struct GammaProduct {
  std::vector<Affine> numerator_args;
  std::vector<Affine> denominator_args;
  std::vector<Affine> rational_factors;
  std::vector<Affine> rational_divisors;
  double scale = 1.0;
  bool sign_flip = false;
  std::optional<double> domain_lo;
  std::optional<double> domain_hi;

  GammaProduct& gamma(Affine arg, int power = 1);
  GammaProduct& over_gamma(Affine arg, int power = 1);
  GammaProduct& times(Affine factor, int power = 1);
  GammaProduct& over(Affine divisor, int power = 1);
  GammaProduct& scaled(double c);
  GammaProduct& negated();
  GammaProduct& valid_on(double lo, double hi);
};

EvalResult eval_gamma_product(const GammaProduct& gp, double d);

}  // namespace hyperverify
