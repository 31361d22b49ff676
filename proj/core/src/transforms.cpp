#include "hyperverify/transforms.hpp"

#include <cmath>
#include <limits>
#include <tuple>
#include <utility>

#include "hyperverify/errors.hpp"

namespace hyperverify {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_3f2(const AffinePfq& p) {
  if (p.upper.size() != 3 || p.lower.size() != 2) throw InvalidParams("Thomae relations take a 3F2 tuple");
}

Affine constant(double x) { return Affine{0.0, x}; }

}  // namespace

EvalResult evaluate(const Term& t, double d, SeriesOptions opts) {
  const EvalResult coef = eval_gamma_product(t.coefficient, d);
  if (!t.series) return coef;
  if (coef.value == 0.0) return {0.0, 0.0, 0, true};
  const EvalResult s = pfq_at_1(t.series->at(d), opts);
  const double v = coef.value * s.value;
  return {v, std::fabs(coef.value) * s.abs_error + std::fabs(s.value) * coef.abs_error, s.terms_used,
          s.converged};
}

EvalResult evaluate(const Rewrite& r, double d, SeriesOptions opts) {
  EvalResult total = evaluate(Term{r.prefactor, r.target}, d, opts);
  for (const Term& t : r.residual_terms) {
    const EvalResult e = evaluate(t, d, opts);
    total.value += e.value;
    total.abs_error += e.abs_error + kEps * std::fabs(total.value);
    total.terms_used += e.terms_used;
    total.converged = total.converged && e.converged;
  }
  return total;
}

Rewrite thomae_a4(const AffinePfq& p) {
  require_3f2(p);
  const auto [a, b, c] = std::tuple{p.upper[0], p.upper[1], p.upper[2]};
  const auto [e, f] = std::pair{p.lower[0], p.lower[1]};
  Rewrite r;
  r.prefactor.gamma(e + f - a - b - c).gamma(e).over_gamma(e - a).over_gamma(e + f - b - c);
  r.target = AffinePfq{{a, f - c, f - b}, {e + f - b - c, f}};
  return r;
}

Rewrite thomae_a5(const AffinePfq& p) {
  require_3f2(p);
  const auto [a, b, c] = std::tuple{p.upper[0], p.upper[1], p.upper[2]};
  const auto [e, f] = std::pair{p.lower[0], p.lower[1]};
  Rewrite r;
  r.prefactor.gamma(e + f - a - b - c).gamma(f).over_gamma(f - c).over_gamma(e + f - b - a);
  r.target = AffinePfq{{a, f - c, f - b}, {e + f - b - c, f}};
  return r;
}

Rewrite thomae_a51(const AffinePfq& p) {
  require_3f2(p);
  const auto [a, b, c] = std::tuple{p.upper[0], p.upper[1], p.upper[2]};
  const auto [e, f] = std::pair{p.lower[0], p.lower[1]};
  Rewrite r;
  r.prefactor.gamma(e + f - a - b - c).gamma(f).gamma(e).over_gamma(b).over_gamma(e + f - b - c).over_gamma(e + f - a - b);
  r.target = AffinePfq{{e + f - a - b - c, f - b, e - b}, {e + f - b - c, e + f - a - b}};
  return r;
}

Rewrite rewrite_a6(Affine a, Affine b, Affine c) {
  // Gamma(1-c)/(a-b) * (a Gamma(b+1)/Gamma(b-c+1) - b Gamma(a+1)/Gamma(a-c+1))
  Rewrite r;
  r.prefactor.gamma(1 - c).over(a - b).times(a).gamma(b + 1).over_gamma(b - c + 1);
  Term second;
  second.coefficient.gamma(1 - c).over(a - b).times(b).gamma(a + 1).over_gamma(a - c + 1).negated();
  r.residual_terms.push_back(second);
  return r;
}

EvalResult closed_a6(double a, double b, double c) {
  if (std::fabs(a - b) < 1e-12) throw DomainError("closed form needs a != b");
  return evaluate(rewrite_a6(constant(a), constant(b), constant(c)));
}

Rewrite rewrite_a7(Affine a, Affine b, Affine c, Affine dd) {
  Rewrite r;
  r.prefactor.gamma(1 - c).gamma(dd).gamma(a + 1).gamma(b - a).over_gamma(b).over_gamma(dd - a).over_gamma(a - c + 1);
  Term second;
  second.coefficient.times(a).gamma(1 - c).gamma(dd).over_gamma(b - c + 1).over_gamma(dd - b).over(b - a).negated();
  second.series = AffinePfq{{b, b - dd + 1, b - a}, {b - a + 1, b - c + 1}};
  r.residual_terms.push_back(second);
  return r;
}

EvalResult closed_a7(double a, double b, double c, double dd) {
  if (std::fabs(a - b) < 1e-12) throw DomainError("closed form needs a != b");
  return evaluate(rewrite_a7(constant(a), constant(b), constant(c), constant(dd)));
}

EvalResult euler_transform(double a, double b, double c, double z) {
  EvalResult r = gauss_2f1(c - a, c - b, c, z);
  const double f = std::pow(1.0 - z, c - a - b);
  r.value *= f;
  r.abs_error *= f;
  return r;
}

EvalResult pfaff_transform(double a, double b, double c, double z) {
  EvalResult r = gauss_2f1(a, c - b, c, z / (z - 1.0));
  const double f = std::pow(1.0 - z, -a);
  r.value *= f;
  r.abs_error *= f;
  return r;
}

EvalResult connection_formula(double a, double b, double c, double z) {
  const double m = c - a - b;
  if (std::fabs(m - std::round(m)) <= kPoleSnap) throw DomainError("connection formula needs non-integer c-a-b");
  if (!(z > 0.0 && z < 1.0)) throw DomainError("connection formula evaluated outside (0,1)");
  const double w = 1.0 - z;
  const EvalResult c1 = eval_gamma_product(GammaProduct{}.gamma(c).gamma(m).over_gamma(c - a).over_gamma(c - b), 0.0);
  const EvalResult c2 = eval_gamma_product(GammaProduct{}.gamma(c).gamma(-m).over_gamma(a).over_gamma(b), 0.0);
  const EvalResult f1 = gauss_2f1(a, b, 1.0 - m, w);
  const EvalResult f2 = gauss_2f1(c - a, c - b, 1.0 + m, w);
  const double wm = std::pow(w, m);
  const double t1 = c1.value * f1.value;
  const double t2 = c2.value * wm * f2.value;
  const double err = std::fabs(c1.value) * f1.abs_error + std::fabs(c1.abs_error * f1.value) +
                     std::fabs(c2.value * wm) * f2.abs_error + std::fabs(c2.abs_error * wm * f2.value) +
                     8 * kEps * (std::fabs(t1) + std::fabs(t2));
  return {t1 + t2, err, f1.terms_used + f2.terms_used, f1.converged && f2.converged};
}

EvalResult kernel_a1(double p, double q, double d) {
  if (!(p > 0.0 && p < 1.0) || !(q > 0.0 && q < 1.0)) throw DomainError("kernel needs p, q in (0,1)");
  if (!(d >= 0.0 && d < 1.0)) throw DomainError("kernel needs d in [0,1)");
  if (std::fabs(p - q) < 1e-6) throw DomainError("kernel degenerates for p ~ q");
  if (q > p) std::swap(p, q);  // the integrand is symmetric; p > q keeps both arguments <= 0
  const double lam = q / (q - p);
  const Gauss2F1 F(d, 1.0 - d, 2.0 - d);
  const EvalResult f1 = F(lam);
  const EvalResult f2 = F(lam * (1.0 - p));
  const double pre = std::pow(p / (p - q), d) / (p * (1.0 - d));
  const double g = std::pow(1.0 - p, 1.0 - d);
  const double t1 = pre * f1.value;
  const double t2 = pre * g * f2.value;
  const double err = std::fabs(pre) * (f1.abs_error + g * f2.abs_error) + 16 * kEps * (std::fabs(t1) + std::fabs(t2));
  return {t1 - t2, err, f1.terms_used + f2.terms_used, f1.converged && f2.converged};
}

EvalResult kernel_a1_as_printed(double p, double q, double d) {
  if (!(p > q)) throw DomainError("this form needs p > q");
  if (!(p < 1.0) || !(q > 0.0)) throw DomainError("kernel needs p, q in (0,1)");
  if (!(d >= 0.0 && d < 1.0)) throw DomainError("kernel needs d in [0,1)");
  const Gauss2F1 F(1.0 - d, d, 2.0 - d);
  const EvalResult f1 = F(q / (q - p));
  const EvalResult f2 = F(q * (1.0 - p) / (q - p));
  const double t1 = std::pow(p / (p - q), d) / ((1.0 - d) * p) * f1.value;
  const double t2 = std::pow(1.0 - p, -d) * std::pow(p * (1.0 - q) / (p - q), d) / ((1.0 - d) * p) * f2.value;
  return {t1 - t2, 16 * kEps * (std::fabs(t1) + std::fabs(t2)), f1.terms_used + f2.terms_used, true};
}

EvalResult brychkov_a3(double alpha, double a, double b, double c, double a2, double b2, double c2) {
  const Affine A = constant(a), B = constant(b), C = constant(c);
  const Affine A2 = constant(a2), B2 = constant(b2), C2 = constant(c2), AL = constant(alpha);
  Rewrite r;
  r.prefactor.gamma(C).gamma(C2).gamma(C2 - A2 - B2).gamma(AL).gamma(C - A - B + AL)
      .over_gamma(C - A + AL).over_gamma(C - B + AL).over_gamma(C2 - A2).over_gamma(C2 - B2);
  r.target = AffinePfq{{A2, B2, AL, C - A - B + AL}, {C - A + AL, C - B + AL, A2 + B2 - C2 + 1}};
  Term second;
  const Affine s = C + C2 - A - A2 - B - B2 + AL;
  second.coefficient.gamma(C).gamma(C2).gamma(A2 + B2 - C2).gamma(C2 - A2 - B2 + AL).gamma(s)
      .over_gamma(A2).over_gamma(B2).over_gamma(C + C2 - A - A2 - B2 + AL).over_gamma(C + C2 - A2 - B - B2 + AL);
  second.series = AffinePfq{{C2 - A2, C2 - B2, C2 - A2 - B2 + AL, s},
                            {C2 - A2 - B2 + 1, C + C2 - A - A2 - B2 + AL, C + C2 - A2 - B - B2 + AL}};
  r.residual_terms.push_back(second);
  return evaluate(r);
}

}  // namespace hyperverify
