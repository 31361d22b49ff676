#include "hyperverify/appell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hyperverify/errors.hpp"
#include "hyperverify/special_core.hpp"

namespace hyperverify {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxShell = 20'000;
}  // namespace

EvalResult f1_series(const AppellParams& p, double tol) {
  if (!(std::fabs(p.x) < 1.0) || !(std::fabs(p.y) < 1.0)) {
    throw DomainError("F1 series needs |x| < 1 and |y| < 1");
  }
  if (nonpositive_integer(p.gamma)) throw InvalidParams("F1 with non-positive integer gamma");
  if (p.x == 0.0 && p.y == 0.0) return {1.0, 0.0, 1, true};

  // A_i = (b)_i x^i / i!, B_j = (b')_j y^j / j!, grown one entry per shell.
  std::vector<double> A{1.0};
  std::vector<double> B{1.0};
  const double rho = std::max(std::fabs(p.x), std::fabs(p.y));
  const double scale = std::fabs(p.alpha) + std::fabs(p.beta) + std::fabs(p.beta_prime) + std::fabs(p.gamma);
  double coef = 1.0;  // (alpha)_m / (gamma)_m
  double sum = 1.0, comp = 0.0, abs_sum = 1.0;
  int quiet = 0;
  for (std::size_t m = 1; m < kMaxShell; ++m) {
    const double mm = static_cast<double>(m - 1);
    coef *= (p.alpha + mm) / (p.gamma + mm);
    A.push_back(A.back() * (p.beta + mm) / (mm + 1.0) * p.x);
    B.push_back(B.back() * (p.beta_prime + mm) / (mm + 1.0) * p.y);
    double shell = 0.0;
    for (std::size_t i = 0; i <= m; ++i) shell += A[i] * B[m - i];
    shell *= coef;

    const double t = sum + shell;
    comp += std::fabs(sum) >= std::fabs(shell) ? (sum - t) + shell : (shell - t) + sum;
    sum = t;
    abs_sum += std::fabs(shell);

    // Past the parameter transient the shells decay at least like (rho (1+eps))^m, up
    // to a polynomial factor; bound the tail geometrically with a safety margin.
    const double mf = static_cast<double>(m);
    if (mf > 2.0 * scale + 8.0) {
      const double r = std::min(0.999, rho * (1.0 + (scale + 2.0) / mf));
      const double tail = std::fabs(shell) * r / (1.0 - r);
      const double v = sum + comp;
      if (tail <= tol * std::fabs(v)) {
        if (++quiet >= 3) return {v, tail + 4 * kEps * abs_sum, m + 1, true};
      } else {
        quiet = 0;
      }
    }
  }
  throw NoConvergence("F1 series shell cap reached");
}

EvalResult f1_integral(const AppellParams& p, const QuadratureSpec& quad) {
  if (!(p.alpha > 0.0) || !(p.gamma - p.alpha > 0.0)) {
    throw DomainError("F1 integral needs alpha > 0 and gamma - alpha > 0");
  }
  if (!(p.x < 1.0) || !(p.y < 1.0)) throw DomainError("F1 integral needs x < 1 and y < 1");
  const EvalResult pre = eval_gamma_product(
      GammaProduct{}.gamma(p.gamma).over_gamma(p.alpha).over_gamma(p.gamma - p.alpha), 0.0);
  const double e0 = p.alpha - 1.0;
  const double e1 = p.gamma - p.alpha - 1.0;
  auto f = [&](double u, double uc) {
    // 1 - u x = (1 - x) + x (1 - u) keeps precision when u and x are both near 1.
    const double ox = (1.0 - p.x) + p.x * uc;
    const double oy = (1.0 - p.y) + p.y * uc;
    return std::exp(e0 * std::log(u) + e1 * std::log(uc) - p.beta * std::log(ox) - p.beta_prime * std::log(oy));
  };
  QuadratureSpec spec = quad;
  spec.dimension = 1;
  const EvalResult r = integrate_1d(f, spec);
  const double v = pre.value * r.value;
  return {v, std::fabs(pre.value) * r.abs_error + std::fabs(r.value) * pre.abs_error, r.terms_used, r.converged};
}

}  // namespace hyperverify
