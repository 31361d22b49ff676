#pragma once

#include <optional>
#include <vector>

#include "hyperverify/eval_result.hpp"
#include "hyperverify/hypergeometric.hpp"
#include "hyperverify/special_core.hpp"

namespace hyperverify {

// coefficient * pFq(series; 1), or the bare coefficient when series is empty.
struct Term {
  GammaProduct coefficient;
  std::optional<AffinePfq> series;
};

// source pFq(1) = prefactor * target pFq(1) + sum of residual terms. Closed forms with
// no leading series leave target empty.
struct Rewrite {
  GammaProduct prefactor;
  std::optional<AffinePfq> target;
  std::vector<Term> residual_terms;
};

EvalResult evaluate(const Term& t, double d = 0.0, SeriesOptions opts = {});
EvalResult evaluate(const Rewrite& r, double d = 0.0, SeriesOptions opts = {});

// Thomae relations for 3F2(a,b,c; e,f; 1). The input tuple is (a,b,c; e,f).
Rewrite thomae_a4(const AffinePfq& p);
// Variant with prefactor Gamma(e+f-a-b-c)Gamma(f)/(Gamma(f-c)Gamma(e+f-a-b)) and the
// same target as thomae_a4. It does not hold numerically; kept as an erratum probe.
Rewrite thomae_a5(const AffinePfq& p);
Rewrite thomae_a51(const AffinePfq& p);

// 3F2(a, b, c; a+1, b+1; 1) in closed form.
Rewrite rewrite_a6(Affine a, Affine b, Affine c);
EvalResult closed_a6(double a, double b, double c);

// 3F2(a, b, c; a+1, dd; 1) as a gamma term plus a residual 3F2(b, b-dd+1, b-a; b-a+1, b-c+1; 1).
Rewrite rewrite_a7(Affine a, Affine b, Affine c, Affine dd);
EvalResult closed_a7(double a, double b, double c, double dd);

// Right-hand sides of the 2F1 transformations.
EvalResult euler_transform(double a, double b, double c, double z);
EvalResult pfaff_transform(double a, double b, double c, double z);
// Two-term expansion around z = 1 for non-integer c - a - b.
EvalResult connection_formula(double a, double b, double c, double z);

// int_0^1 (1-pz)^-d (1-qz)^-d dz in closed form (two 2F1 terms).
EvalResult kernel_a1(double p, double q, double d);
// Variant whose second coefficient is (1-p)^-d (p(1-q)/(p-q))^d / ((1-d) p). It disagrees
// with quadrature; kept as an erratum probe. Needs p > q.
EvalResult kernel_a1_as_printed(double p, double q, double d);

// int_0^1 x^(alpha-1) (1-x)^(c-1) 2F1(a,b;c;1-x) 2F1(a2,b2;c2;1-x) dx as two 4F3(1) terms.
EvalResult brychkov_a3(double alpha, double a, double b, double c, double a2, double b2, double c2);

}  // namespace hyperverify
