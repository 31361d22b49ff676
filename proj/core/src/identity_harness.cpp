#include "hyperverify/identity_harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "hyperverify/appell.hpp"
#include "hyperverify/errors.hpp"
#include "hyperverify/hypergeometric.hpp"
#include "hyperverify/integrands.hpp"
#include "hyperverify/special_core.hpp"
#include "hyperverify/transforms.hpp"

namespace hyperverify {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Closed forms are sums of a few balanced pFq(1); 1e-15 relative is below what the
// extrapolation can certify for the slowest ones.
constexpr SeriesOptions kClosedForm{1e-14, 1'000'000};

// Gamma(3-3d)Gamma(4-5d) / (Gamma(4-4d)Gamma(5-5d)), shared by most closed forms.
GammaProduct& times_r(GammaProduct& g) {
  return g.gamma(3 - 3 * D).gamma(4 - 5 * D).over_gamma(4 - 4 * D).over_gamma(5 - 5 * D);
}

const AffinePfq kF32a{{2 - 2 * D, 1, D}, {3 - 2 * D, 2 - D}};
const AffinePfq kF32b{{2 - 2 * D, 1, 2 * D - 1}, {3 - 2 * D, 2 - D}};
const AffinePfq kF32c{{2 - 2 * D, 3 - 3 * D, 4 - 5 * D}, {4 - 4 * D, 5 - 5 * D}};
const AffinePfq kF43{{1, D, 2 - 2 * D, 3 - 3 * D}, {2 - D, 3 - 2 * D, 4 - 4 * D}};

EvalResult sum_terms(const std::vector<Term>& terms, double d) {
  EvalResult total{0.0, 0.0, 0, true};
  for (const Term& t : terms) {
    const EvalResult e = evaluate(t, d, kClosedForm);
    total.value += e.value;
    total.abs_error += e.abs_error + kEps * std::fabs(total.value);
    total.terms_used += e.terms_used;
    total.converged = total.converged && e.converged;
  }
  return total;
}

EvalResult add(EvalResult a, const EvalResult& b, double sign = 1.0) {
  a.value += sign * b.value;
  a.abs_error += b.abs_error + kEps * std::fabs(a.value);
  a.terms_used += b.terms_used;
  a.converged = a.converged && b.converged;
  return a;
}

EvalResult scale(EvalResult a, double k) {
  a.value *= k;
  a.abs_error *= std::fabs(k);
  return a;
}

std::vector<Term> rhs_main_terms() {
  std::vector<Term> t(4);
  t[0].coefficient.gamma(1 - D, 2).over_gamma(2 - 2 * D).over(4 - 5 * D).scaled(0.5);
  t[0].series = kF32b;
  t[1].coefficient.gamma(1 - D).gamma(3 - 3 * D).over_gamma(4 - 4 * D).over(4 - 5 * D).scaled(0.5).negated();
  t[1].series = kF32a;
  t[2].coefficient.gamma(1 - D, 2).over_gamma(2 - 2 * D).over(4 - 5 * D).scaled(0.5);
  t[2].series = kF32a;
  t[3].coefficient.gamma(1 - D).gamma(3 - 3 * D).over_gamma(4 - 4 * D).over(4 - 5 * D).scaled(0.5).negated();
  t[3].series = kF43;
  return t;
}

std::vector<Term> i1_terms() {
  std::vector<Term> t(2);
  times_r(t[0].coefficient.gamma(1 - D).over(1 - D).over(2 - 2 * D));
  t[0].series = kF32a;
  t[1].coefficient.gamma(1 - D, 3).over_gamma(3 - 2 * D).over_gamma(2 - D).gamma(4 - 5 * D).over_gamma(5 - 5 * D).negated();
  t[1].series = kF32b;
  return t;
}

// Before the A.7 and Thomae steps.
std::vector<Term> i1_pre_terms() {
  std::vector<Term> t(2);
  times_r(t[0].coefficient.gamma(1 - D).over(D - 1).gamma(2 * D - 1).over_gamma(2 * D));
  t[0].series = AffinePfq{{1, D, 2 * D - 1}, {2 - D, 2 * D}};
  t[1].coefficient.gamma(1 - D, 2).over_gamma(3 - 2 * D).gamma(2 * D - 1).over_gamma(2 * D).gamma(4 - 5 * D).over_gamma(5 - 5 * D);
  t[1].series = AffinePfq{{1, D, 2 * D - 1}, {3 - 2 * D, 2 * D}};
  return t;
}

std::vector<Term> i2a_terms() {
  std::vector<Term> t(1);
  t[0].coefficient.gamma(1 - D, 2).gamma(2 - 2 * D, 2).gamma(2 * D - 1).gamma(3 - 3 * D)
      .over_gamma(D, 2).over_gamma(5 - 5 * D).over_gamma(4 - 4 * D).over(4 - 5 * D);
  t[0].series = kF32c;
  return t;
}

std::vector<Term> i2a_pre_terms() {
  std::vector<Term> t(2);
  t[0].coefficient.gamma(2 * D - 1).gamma(1 - D, 2).gamma(3 * D - 2).gamma(2 - 2 * D).gamma(2 - 3 * D)
      .over_gamma(D, 3).over_gamma(5 - 5 * D);
  t[0].series = AffinePfq{{2 - 2 * D, 2 * D - 1, 3 * D - 2}, {D, 3 * D - 1}};
  t[1].coefficient.gamma(2 * D - 1).gamma(1 - D, 2).gamma(4 - 5 * D).gamma(3 - 3 * D).gamma(3 * D - 2, 2)
      .over_gamma(5 - 5 * D).over_gamma(D, 3);
  return t;
}

Term i2b_f43_term() {
  Term t;
  times_r(t.coefficient.gamma(1 - D).over(D - 1).gamma(2 - 2 * D).over_gamma(3 - 2 * D));
  t.series = kF43;
  return t;
}

std::vector<Term> i2b_terms() {
  std::vector<Term> t = i2a_terms();
  t.insert(t.begin(), i2b_f43_term());
  return t;
}

std::vector<Term> i2b_pre_terms() {
  std::vector<Term> t(2);
  t[0] = i2b_f43_term();
  times_r(t[1].coefficient.gamma(1 - D, 2).gamma(1 - 2 * D).over_gamma(3 - 2 * D).gamma(2 * D).over_gamma(D)).negated();
  t[1].series = AffinePfq{{D, 2 - 2 * D, 3 - 3 * D}, {3 - 2 * D, 4 - 4 * D}};
  return t;
}

std::vector<Term> j1a_terms() {
  std::vector<Term> t(1);
  t[0].coefficient.gamma(1 - D).over(1 - D, 2).gamma(2 - D).over_gamma(3 - 2 * D).gamma(4 - 5 * D).over_gamma(5 - 5 * D);
  t[0].series = AffinePfq{{1, D, 2 - 2 * D}, {2 - D, 3 - 2 * D}};
  return t;
}

std::vector<Term> j1b_terms() {
  std::vector<Term> t(1);
  times_r(t[0].coefficient.gamma(1 - D).over(1 - D, 2).scaled(0.5));
  t[0].series = kF43;
  return t;
}

// ---- integral sides ----

QuadratureSpec spec2d(const QuadratureSpec& base, bool corner) {
  QuadratureSpec s = base;
  s.dimension = 2;
  s.corner_at_one = corner;
  return s;
}

QuadratureSpec spec1d() {
  QuadratureSpec s;
  s.dimension = 1;
  s.levels = 9;
  s.target_tol = 1e-13;
  return s;
}

EvalResult mc(const IntegrandND& f, int dim, const MCSpec& base) {
  MCSpec s = base;
  s.dimension = dim;
  s.corner_stretch = 4.0;
  return mc_integrate(f, s);
}

void require_band(double d) {
  if (!(d >= 0.0 && d < 1.0)) throw DomainError("d outside [0, 1)");
  if (std::fabs(d - 0.8) < 0.02) throw DomainError("d inside the exclusion band around 0.8");
}

EvalResult j1_1d_value(double d) { return integrate_1d(integrands::j1_1d(d), spec1d()); }

// ---- registry construction helpers ----

SideEvaluator closed(EvalResult (*f)(double)) {
  return [f](double d, const CheckConfig&) { return f(d); };
}

SideEvaluator terms(std::vector<Term> (*f)()) {
  return [f](double d, const CheckConfig&) { return sum_terms(f(), d); };
}

Interval cl(double lo, double hi) { return {lo, hi, false, false}; }
Interval lo_open(double lo, double hi) { return {lo, hi, true, false}; }
Interval open(double lo, double hi) { return {lo, hi, true, true}; }

Validity valid(std::vector<Interval> iv, std::vector<double> excluded = {}) {
  Validity v;
  v.intervals = std::move(iv);
  v.excluded_points = std::move(excluded);
  return v;
}

EvalResult pfq(const AffinePfq& p, double d) { return pfq_at_1(p.at(d), kClosedForm); }

EvalResult quad_1d(const Integrand1D& f) { return integrate_1d(f, spec1d()); }

// Fixed evaluation points for the appendix cross-checks.
constexpr double kZ = 0.7;
constexpr double kP = 0.6, kQ = 0.3;

std::vector<IdentityCheck> build_registry() {
  std::vector<IdentityCheck> r;
  auto add_check = [&](std::string id, std::string description, SideEvaluator lhs, SideEvaluator rhs, Validity v,
                       double tol, CheckKind kind = CheckKind::fast,
                       std::optional<std::pair<double, double>> widened = std::nullopt) {
    r.push_back({std::move(id), std::move(description), std::move(lhs), std::move(rhs), std::move(v), tol, kind,
                 widened});
  };

  // Main identity and its intermediates.
  add_check("main", "double integral of x^(3-3d) y^(1-d) (1-xy)^-d F(x) F(y) vs the three-term closed form",
             [](double d, const CheckConfig& c) { return lhs_main(d, c.quad2d); }, closed(rhs_main),
             valid({cl(0.0, 0.78), cl(0.82, 0.95)}, {0.8}), 1e-6, CheckKind::fast, std::pair{0.9, 1e-4});
  add_check("I1", "I1 before and after the A.7/Thomae rewriting", terms(i1_pre_terms), closed(i1_closed),
             valid({open(0.5, 1.0)}, {0.8}), 1e-9);
  add_check("I2a", "I2(a) before and after the Thomae rewriting", terms(i2a_pre_terms), closed(i2a_closed),
             valid({open(0.5, 1.0)}, {2.0 / 3.0, 0.8}), 1e-9);
  add_check("I2b", "I2(b) before and after the Thomae rewriting", terms(i2b_pre_terms), closed(i2b_closed),
             valid({open(0.5, 1.0)}, {0.8}), 1e-9);
  add_check("I2a-integral", "2D defining integral of I2(a) vs its closed form",
             [](double d, const CheckConfig& c) {
               return integrate_2d(integrands::i2a_2d(d), spec2d(c.quad2d, true));
             },
             closed(i2a_closed), valid({lo_open(0.5, 0.78)}), 1e-7);
  add_check("I2b-integral", "2D defining integral of I2(b) vs its closed form",
             [](double d, const CheckConfig& c) {
               return integrate_2d(integrands::i2b_2d(d), spec2d(c.quad2d, true));
             },
             closed(i2b_closed), valid({lo_open(0.5, 0.78)}), 1e-7);
  add_check("J1a", "J1 by 1D quadrature plus the J1(b) closed form vs the J1(a) closed form",
             [](double d, const CheckConfig&) { return add(j1_1d_value(d), j1b_closed(d)); }, closed(j1a_closed),
             valid({cl(0.0, 0.95)}, {0.8}), 1e-8);
  add_check("J1b", "J1(a) closed form minus J1 by 1D quadrature vs the J1(b) closed form",
             [](double d, const CheckConfig&) { return add(j1a_closed(d), j1_1d_value(d), -1.0); },
             closed(j1b_closed), valid({cl(0.0, 0.95)}, {0.8}), 1e-8);
  add_check("J2", "2D integral for J2 vs its closed form",
             [](double d, const CheckConfig& c) {
               return integrate_2d(integrands::j2_2d(d), spec2d(c.quad2d, true));
             },
             closed(j2_closed), valid({cl(0.0, 0.78)}), 1e-7);
  add_check("J2-equals-J1b", "closed forms of J2 and J1(b) coincide", closed(j2_closed), closed(j1b_closed),
             valid({cl(0.0, 1.0)}, {0.8}), 1e-12);
  add_check("assembly", "(d-1)^2 (J1a - J1b - J2 - I1 + I2a - I2b) vs the main closed form", closed(assembly_rhs),
             closed(rhs_main), valid({open(0.0, 1.0)}, {0.5, 0.8}), 1e-9);

  // Monte Carlo checks of the defining multiple integrals.
  add_check("quad4d", "4D starting integral vs J1a - J1b - J2",
             [](double d, const CheckConfig& c) { return mc(integrands::quad4d(d), 4, c.mc); },
             [](double d, const CheckConfig&) {
               return add(add(j1a_closed(d), j1b_closed(d), -1.0), j2_closed(d), -1.0);
             },
             valid({cl(0.0, 0.78)}), 1e-12, CheckKind::slow);
  add_check("I1-integral", "3D defining integral of I1 vs its closed form",
             [](double d, const CheckConfig& c) { return mc(integrands::i1_3d(d), 3, c.mc); }, closed(i1_closed),
             valid({lo_open(0.5, 0.78)}), 1e-12, CheckKind::slow);
  add_check("J1a-integral", "3D integral for J1 plus the J1(b) closed form vs the J1(a) closed form",
             [](double d, const CheckConfig& c) { return add(mc(integrands::j1_3d(d), 3, c.mc), j1b_closed(d)); },
             closed(j1a_closed), valid({cl(0.0, 0.78)}), 1e-12, CheckKind::slow);
  add_check("J1b-integral", "J1(a) closed form minus the 3D integral for J1 vs the J1(b) closed form",
             [](double d, const CheckConfig& c) {
               return add(j1a_closed(d), mc(integrands::j1_3d(d), 3, c.mc), -1.0);
             },
             closed(j1b_closed), valid({cl(0.0, 0.78)}), 1e-12, CheckKind::slow);
  add_check("J2-integral", "3D defining integral of J2 vs its closed form",
             [](double d, const CheckConfig& c) { return mc(integrands::j2_3d(d), 3, c.mc); }, closed(j2_closed),
             valid({cl(0.0, 0.78)}), 1e-12, CheckKind::slow);

  // Appendix formulas, each at a fixed argument as a function of d.
  add_check("A.0", "Euler transformation of 2F1(1,d;2-d;0.7)",
             [](double d, const CheckConfig&) { return gauss_2f1_series(1.0, d, 2.0 - d, kZ); },
             [](double d, const CheckConfig&) { return euler_transform(1.0, d, 2.0 - d, kZ); },
             valid({cl(0.0, 0.95)}), 1e-9);
  add_check("A.0-pfaff", "Pfaff transformation of 2F1(1,d;2-d;0.7)",
             [](double d, const CheckConfig&) { return gauss_2f1_series(1.0, d, 2.0 - d, kZ); },
             [](double d, const CheckConfig&) { return pfaff_transform(1.0, d, 2.0 - d, kZ); },
             valid({cl(0.0, 0.95)}), 1e-9);
  add_check("A.1", "int_0^1 (1-0.6z)^-d (1-0.3z)^-d dz by quadrature vs the two-term kernel",
             [](double d, const CheckConfig&) {
               return quad_1d([d](double z, double) { return std::pow((1.0 - kP * z) * (1.0 - kQ * z), -d); });
             },
             [](double d, const CheckConfig&) { return kernel_a1(kP, kQ, d); }, valid({cl(0.0, 0.95)}), 1e-8);
  add_check("A.2", "connection formula around z = 1 for 2F1(1,d;2-d;0.7)",
             [](double d, const CheckConfig&) { return gauss_2f1_series(1.0, d, 2.0 - d, kZ); },
             [](double d, const CheckConfig&) { return connection_formula(1.0, d, 2.0 - d, kZ); },
             valid({cl(0.0, 0.95)}, {0.0, 0.5}), 1e-9);
  add_check("A.2a", "F1(1; 2d-2, d+1; 2-d; 0.5, 0.25): double series vs Euler integral",
             [](double d, const CheckConfig&) { return f1_series({1.0, 2 * d - 2, d + 1, 2 - d, 0.5, 0.25}); },
             [](double d, const CheckConfig&) { return f1_integral({1.0, 2 * d - 2, d + 1, 2 - d, 0.5, 0.25}); },
             valid({cl(0.0, 0.95)}), 1e-8);
  add_check("A.2b", "F1(1; 2d, d; 3-d; 0.4, 0.16): double series vs Euler integral",
             [](double d, const CheckConfig&) { return f1_series({1.0, 2 * d, d, 3 - d, 0.4, 0.16}); },
             [](double d, const CheckConfig&) { return f1_integral({1.0, 2 * d, d, 3 - d, 0.4, 0.16}); },
             valid({cl(0.0, 0.95)}), 1e-8);
  add_check("A.2a-reduction", "z5 integral of the J1 integrand at z2 = z3 = 0.5 vs F1/(1-d)",
             [](double d, const CheckConfig&) {
               return quad_1d([d](double u, double uc) {
                 return std::pow(uc, -d) * std::pow(1.0 - 0.5 * u, 2.0 - 2.0 * d) * std::pow(1.0 - 0.25 * u, -d - 1.0);
               });
             },
             [](double d, const CheckConfig&) {
               return scale(f1_series({1.0, 2 * d - 2, d + 1, 2 - d, 0.5, 0.25}), 1.0 / (1.0 - d));
             },
             valid({cl(0.0, 0.95)}), 1e-8);
  add_check("A.3", "product of two 2F1(1-z) against z^(1-2d)(1-z)^(1-d) by quadrature vs the two 4F3 terms",
             [](double d, const CheckConfig&) {
               const Gauss2F1 f(1 - d, 2 - 2 * d, 2 - d), g(d, 3 - 2 * d, 5 - 4 * d);
               return quad_1d([&](double z, double zc) {
                 if (z == 0.0) return 0.0;
                 return std::pow(z, 1 - 2 * d) * std::pow(zc, 1 - d) * f.complement(z).value * g.complement(z).value;
               });
             },
             [](double d, const CheckConfig&) {
               return brychkov_a3(2 - 2 * d, 1 - d, 2 - 2 * d, 2 - d, d, 3 - 2 * d, 5 - 4 * d);
             },
             valid({open(2.0 / 3.0, 0.8)}), 1e-7);
  add_check("3.00", "3F2 reduction 2F1(1, 2d-1; 3-d; 1) vs Gauss summation",
             [](double d, const CheckConfig&) { return pfq_at_1({{1.0, 2 * d - 1}, {3 - d}}); },
             [](double d, const CheckConfig&) { return gauss_sum(1.0, 2 * d - 1, 3 - d); },
             valid({cl(0.0, 0.95)}), 1e-9);
  const AffinePfq a4_tuple{{1, 5 - 5 * D, 2 - D}, {5 - 3 * D, 5 - 4 * D}};
  add_check("A.4", "Thomae relation on 3F2(1, 5-5d, 2-d; 5-3d, 5-4d; 1)",
             [a4_tuple](double d, const CheckConfig&) { return pfq(a4_tuple, d); },
             [a4_tuple](double d, const CheckConfig&) { return evaluate(thomae_a4(a4_tuple), d); },
             valid({cl(0.0, 0.95)}), 1e-9);
  const AffinePfq a51_tuple{{2 - 2 * D, D, 3 - 3 * D}, {3 - 2 * D, 4 - 4 * D}};
  add_check("A.51", "Thomae relation on 3F2(2-2d, d, 3-3d; 3-2d, 4-4d; 1)",
             [a51_tuple](double d, const CheckConfig&) { return pfq(a51_tuple, d); },
             [a51_tuple](double d, const CheckConfig&) { return evaluate(thomae_a51(a51_tuple), d); },
             valid({lo_open(0.0, 0.95)}), 1e-9);
  add_check("A.6", "3F2(2d-1, 1, d; 2d, 2; 1) vs its gamma closed form",
             [](double d, const CheckConfig&) { return pfq_at_1({{2 * d - 1, 1.0, d}, {2 * d, 2.0}}); },
             [](double d, const CheckConfig&) { return closed_a6(2 * d - 1, 1.0, d); },
             valid({lo_open(0.0, 0.95)}), 1e-9);
  add_check("A.7", "3F2(2d-1, 1, d; 2d, 2-d; 1) vs gamma term plus residual 3F2",
             [](double d, const CheckConfig&) { return pfq_at_1({{2 * d - 1, 1.0, d}, {2 * d, 2 - d}}); },
             [](double d, const CheckConfig&) { return closed_a7(2 * d - 1, 1.0, d, 2 - d); },
             valid({lo_open(0.0, 0.95)}), 1e-9);

  // Exploratory: printed variants that do not hold, and continuation below d = 1/2.
  const AffinePfq a5_tuple{{1, 5 - 5 * D, 2 - D}, {4 - 2 * D, 5 - 4 * D}};
  add_check("A.5", "Thomae variant as printed on 3F2(1, 5-5d, 2-d; 4-2d, 5-4d; 1); expected to fail",
             [a5_tuple](double d, const CheckConfig&) { return pfq(a5_tuple, d); },
             [a5_tuple](double d, const CheckConfig&) { return evaluate(thomae_a5(a5_tuple), d); },
             valid({cl(0.0, 0.95)}), 1e-9, CheckKind::exploratory);
  add_check("A.1-printed", "two-term kernel as printed vs quadrature; expected to fail",
             [](double d, const CheckConfig&) {
               return quad_1d([d](double z, double) { return std::pow((1.0 - kP * z) * (1.0 - kQ * z), -d); });
             },
             [](double d, const CheckConfig&) { return kernel_a1_as_printed(kP, kQ, d); }, valid({cl(0.0, 0.95)}),
             1e-8, CheckKind::exploratory);
  add_check("I1-continuation", "I1 rewriting below d = 1/2", terms(i1_pre_terms), closed(i1_closed),
             valid({open(0.0, 0.5)}), 1e-9, CheckKind::exploratory);
  add_check("I2a-continuation", "I2(a) rewriting below d = 1/2", terms(i2a_pre_terms), closed(i2a_closed),
             valid({open(0.0, 0.5)}, {1.0 / 3.0}), 1e-9, CheckKind::exploratory);
  add_check("I2b-continuation", "I2(b) rewriting below d = 1/2", terms(i2b_pre_terms), closed(i2b_closed),
             valid({open(0.0, 0.5)}), 1e-9, CheckKind::exploratory);

  std::sort(r.begin(), r.end(), [](const IdentityCheck& a, const IdentityCheck& b) { return a.id < b.id; });
  return r;
}

CheckReport unevaluated(const IdentityCheck& c, double d, double tol, Verdict v, std::string note) {
  return {c.id, d, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, tol, v, std::move(note)};
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped_out_of_domain: return "skipped-out-of-domain";
    case Verdict::divergent: return "divergent";
  }
  return "unknown";
}

std::string_view to_string(CheckKind k) {
  switch (k) {
    case CheckKind::fast: return "fast";
    case CheckKind::slow: return "slow";
    case CheckKind::exploratory: return "exploratory";
  }
  return "unknown";
}

bool Validity::contains(double d) const {
  if (!std::isfinite(d)) return false;
  for (double x : excluded_points) {
    if (std::fabs(d - x) <= exclusion_radius) return false;
  }
  return std::any_of(intervals.begin(), intervals.end(), [d](const Interval& iv) {
    const bool above = iv.lo_open ? d > iv.lo : d >= iv.lo;
    const bool below = iv.hi_open ? d < iv.hi : d <= iv.hi;
    return above && below;
  });
}

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> r = build_registry();
  return r;
}

const IdentityCheck& find_check(std::string_view id) {
  const auto& r = registry();
  auto it = std::find_if(r.begin(), r.end(), [id](const IdentityCheck& c) { return c.id == id; });
  if (it == r.end()) throw UnknownIdentity("unknown identity: " + std::string(id));
  return *it;
}

CheckConfig default_check_config() {
  CheckConfig c;
  c.quad2d.dimension = 2;
  c.quad2d.levels = 7;
  c.quad2d.target_tol = 1e-10;
  c.mc.dimension = 4;
  c.mc.samples = 10'000'000;
  c.mc.seed = 42;
  c.mc.corner_stretch = 4.0;
  return c;
}

std::vector<double> default_grid() { return {0.0, 0.1, 0.25, 0.3, 0.4, 0.5, 0.6, 0.65, 0.7, 0.75, 0.9}; }

EvalResult rhs_main(double d) { return sum_terms(rhs_main_terms(), d); }

EvalResult lhs_main(double d, const QuadratureSpec& spec) {
  require_band(d);
  if (d > 0.95) throw DomainError("d above 0.95");
  if (d > 0.8) return lhs_main_continued(d, spec);
  return integrate_2d(integrands::main_duffy(d), spec2d(spec, false));
}

EvalResult lhs_main_continued(double d, const QuadratureSpec& spec) {
  require_band(d);
  if (!(d > 0.5)) throw DomainError("corner subtraction needs d > 1/2");
  const EvalResult body = integrate_2d(integrands::main_subtracted(d), spec2d(spec, false));
  // int_0^1 t^(a-1) (1+t)^-d dt = 2F1(d, a; a+1; -1) / a with a = 2-2d.
  const double a = 2.0 - 2.0 * d;
  const EvalResult k = gauss_2f1(d, a, a + 1.0, -1.0);
  const double c = integrands::main_corner_coefficient(d) / ((4.0 - 5.0 * d) * a);
  return add(body, scale(k, c));
}

EvalResult i1_closed(double d) { return sum_terms(i1_terms(), d); }
EvalResult i2a_closed(double d) { return sum_terms(i2a_terms(), d); }
EvalResult i2b_closed(double d) { return sum_terms(i2b_terms(), d); }
EvalResult j1a_closed(double d) { return sum_terms(j1a_terms(), d); }
EvalResult j1b_closed(double d) { return sum_terms(j1b_terms(), d); }
EvalResult j2_closed(double d) { return j1b_closed(d); }

EvalResult assembly_rhs(double d) {
  EvalResult s = j1a_closed(d);
  s = add(s, j1b_closed(d), -1.0);
  s = add(s, j2_closed(d), -1.0);
  s = add(s, i1_closed(d), -1.0);
  s = add(s, i2a_closed(d));
  s = add(s, i2b_closed(d), -1.0);
  return scale(s, (d - 1.0) * (d - 1.0));
}

Verdict judge(double lhs, double lhs_err, double rhs, double rhs_err, double tol) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) return Verdict::divergent;
  const double diff = std::fabs(lhs - rhs);
  const double bound = std::max(tol * std::max(std::fabs(lhs), std::fabs(rhs)), lhs_err + rhs_err + kTolAbsFloor);
  return diff <= bound ? Verdict::pass : Verdict::fail;
}

CheckReport check(std::string_view id, double d, std::optional<double> tol, const CheckConfig& config) {
  const IdentityCheck& c = find_check(id);
  double t = c.default_tol;
  if (c.widened_tol && d >= c.widened_tol->first) t = c.widened_tol->second;
  if (tol) t = *tol;
  if (!c.validity.contains(d)) {
    return unevaluated(c, d, t, Verdict::skipped_out_of_domain, "d outside the validity domain");
  }
  EvalResult l, r;
  try {
    l = c.lhs(d, config);
    r = c.rhs(d, config);
  } catch (const DomainError& e) {
    return unevaluated(c, d, t, Verdict::skipped_out_of_domain, e.what());
  } catch (const Error& e) {
    return unevaluated(c, d, t, Verdict::divergent, e.what());
  }
  CheckReport rep{c.id, d, l.value, l.abs_error, r.value, r.abs_error, 0.0, 0.0, t, Verdict::fail, {}};
  rep.abs_diff = std::fabs(l.value - r.value);
  const double scale_ = std::max(std::fabs(l.value), std::fabs(r.value));
  rep.rel_diff = scale_ > 0.0 ? rep.abs_diff / scale_ : 0.0;
  rep.verdict = judge(l.value, l.abs_error, r.value, r.abs_error, t);
  if (!l.converged || !r.converged) rep.note = "an evaluation stopped before its target tolerance";
  return rep;
}

CheckReport check_multi_integral(std::string_view id, double d, const MCSpec& mc) {
  CheckConfig config = default_check_config();
  config.mc = mc;
  return check(id, d, std::nullopt, config);
}

std::vector<CheckReport> sweep(std::span<const double> grid, std::optional<double> tol, const SweepOptions& options) {
  std::vector<double> g(grid.begin(), grid.end());
  std::sort(g.begin(), g.end());
  std::vector<CheckReport> out;
  for (const IdentityCheck& c : registry()) {
    if (c.kind == CheckKind::exploratory) continue;
    if (c.kind == CheckKind::slow && !options.include_slow) continue;
    for (double d : g) out.push_back(check(c.id, d, tol, options.config));
  }
  return out;
}

}  // namespace hyperverify
