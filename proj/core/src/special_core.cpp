#include "hyperverify/special_core.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hyperverify/errors.hpp"

namespace hyperverify {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

SignedLog SignedLog::from(double x) {
  if (x == 0.0) return zero();
  return {std::log(std::fabs(x)), x > 0 ? 1 : -1};
}

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_magnitude);
}

SignedLog operator*(SignedLog a, SignedLog b) {
  if (a.sign == 0 || b.sign == 0) return SignedLog::zero();
  return {a.log_magnitude + b.log_magnitude, a.sign * b.sign};
}

SignedLog operator/(SignedLog a, SignedLog b) {
  if (b.sign == 0) throw DivergentError("division by an exact zero");
  if (a.sign == 0) return SignedLog::zero();
  return {a.log_magnitude - b.log_magnitude, a.sign * b.sign};
}

std::optional<int> nonpositive_integer(double x, double snap) {
  if (x > snap) return std::nullopt;
  const double r = std::round(x);
  if (std::fabs(x - r) <= snap) return static_cast<int>(r);
  return std::nullopt;
}

double sin_pi(double x) {
  // Reduce to r in [-1, 1]; x - 2*round(x/2) is exact in binary floating point.
  double r = x - 2.0 * std::round(0.5 * x);
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

SignedLog ln_gamma_signed(double x) {
  if (nonpositive_integer(x)) {
    throw PoleError("Gamma pole at x = " + std::to_string(x));
  }
  if (x > 0.0) return {std::lgamma(x), 1};
  // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
  const double s = sin_pi(x);
  const double lg = std::lgamma(1.0 - x);
  return {std::log(std::numbers::pi) - std::log(std::fabs(s)) - lg, s > 0 ? 1 : -1};
}

double pochhammer(double a, std::size_t k) {
  double p = 1.0;
  for (std::size_t i = 0; i < k; ++i) p *= a + static_cast<double>(i);
  return p;
}

double digamma(double x) {
  if (nonpositive_integer(x)) throw PoleError("digamma pole");
  double acc = 0.0;
  if (x < 0.0) {
    // psi(x) = psi(1 - x) - pi cot(pi x)
    const double c = std::numbers::pi * sin_pi(x + 0.5) / sin_pi(x);
    return digamma(1.0 - x) - c;
  }
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double x2 = 1.0 / (x * x);
  // Asymptotic series with Bernoulli coefficients.
  const double tail =
      x2 * (1.0 / 12 - x2 * (1.0 / 120 - x2 * (1.0 / 252 - x2 * (1.0 / 240 - x2 * (1.0 / 132)))));
  return acc + std::log(x) - 0.5 / x - tail;
}

GammaProduct& GammaProduct::gamma(Affine arg, int power) {
  for (int i = 0; i < power; ++i) numerator_args.push_back(arg);
  return *this;
}

GammaProduct& GammaProduct::over_gamma(Affine arg, int power) {
  for (int i = 0; i < power; ++i) denominator_args.push_back(arg);
  return *this;
}

GammaProduct& GammaProduct::times(Affine factor, int power) {
  for (int i = 0; i < power; ++i) rational_factors.push_back(factor);
  return *this;
}

GammaProduct& GammaProduct::over(Affine divisor, int power) {
  for (int i = 0; i < power; ++i) rational_divisors.push_back(divisor);
  return *this;
}

GammaProduct& GammaProduct::scaled(double c) {
  scale *= c;
  return *this;
}

GammaProduct& GammaProduct::negated() {
  sign_flip = !sign_flip;
  return *this;
}

GammaProduct& GammaProduct::valid_on(double lo, double hi) {
  domain_lo = lo;
  domain_hi = hi;
  return *this;
}

EvalResult eval_gamma_product(const GammaProduct& gp, double d) {
  if ((gp.domain_lo && d < *gp.domain_lo) || (gp.domain_hi && d > *gp.domain_hi)) {
    throw DomainError("gamma product evaluated outside its validity domain");
  }
  for (const Affine& a : gp.numerator_args) {
    if (nonpositive_integer(a.at(d))) {
      throw DivergentError("numerator Gamma pole at argument " + std::to_string(a.at(d)));
    }
  }
  for (const Affine& a : gp.rational_divisors) {
    if (std::fabs(a.at(d)) < kPoleSnap) throw DivergentError("rational divisor vanishes");
  }
  for (const Affine& a : gp.denominator_args) {
    if (nonpositive_integer(a.at(d))) return {0.0, 0.0, 0, true};
  }

  SignedLog acc = SignedLog::from(gp.scale * (gp.sign_flip ? -1.0 : 1.0));
  double err_units = 2.0;
  for (const Affine& a : gp.numerator_args) {
    const SignedLog g = ln_gamma_signed(a.at(d));
    acc = acc * g;
    err_units += 2.0 + std::fabs(g.log_magnitude);
  }
  for (const Affine& a : gp.denominator_args) {
    const SignedLog g = ln_gamma_signed(a.at(d));
    acc = acc / g;
    err_units += 2.0 + std::fabs(g.log_magnitude);
  }
  for (const Affine& a : gp.rational_factors) {
    acc = acc * SignedLog::from(a.at(d));
    err_units += 1.0;
  }
  for (const Affine& a : gp.rational_divisors) {
    acc = acc / SignedLog::from(a.at(d));
    err_units += 1.0;
  }
  if (acc.sign != 0 && acc.log_magnitude > 709.0) throw DivergentError("gamma product overflows");
  const double v = acc.value();
  return {v, std::fabs(v) * kEps * err_units, 0, true};
}

}  // namespace hyperverify
