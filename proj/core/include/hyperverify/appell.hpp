#pragma once

#include "hyperverify/eval_result.hpp"
#include "hyperverify/quadrature.hpp"

namespace hyperverify {

struct AppellParams {
  double alpha = 0.0;
  double beta = 0.0;
  double beta_prime = 0.0;
  double gamma = 0.0;
  double x = 0.0;
  double y = 0.0;
};

// F1 by its double series, summed over shells i + j = m.
EvalResult f1_series(const AppellParams& p, double tol = 1e-15);

// F1 by the Euler-type integral
//   Gamma(g)/(Gamma(a)Gamma(g-a)) int_0^1 u^(a-1) (1-u)^(g-a-1) (1-ux)^-b (1-uy)^-b' du.
EvalResult f1_integral(const AppellParams& p, const QuadratureSpec& quad = {});

}  // namespace hyperverify
