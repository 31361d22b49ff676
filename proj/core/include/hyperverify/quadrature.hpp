#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hyperverify/eval_result.hpp"

namespace hyperverify {

// Integrand behaves like x^lo near 0 and (1-x)^hi near 1.
struct EndpointExponents {
  double lo = 0.0;
  double hi = 0.0;
};

struct QuadratureSpec {
  int dimension = 1;
  // Finest tanh-sinh level; the step is 2^-levels.
  int levels = 7;
  double target_tol = 1e-12;
  std::vector<EndpointExponents> endpoint_exponents;  // one entry per axis, optional
  // 2D only: split the square into two Duffy triangles meeting at (1,1), which turns a
  // singularity along x + y = 2 (e.g. (1-xy)^-d) into endpoint singularities.
  bool corner_at_one = false;
};

// Points carry complements so that integrands can form 1-x without cancellation.
using Integrand1D = std::function<double(double x, double xc)>;

struct Point2 {
  double x, xc, y, yc;
};
using Integrand2D = std::function<double(const Point2&)>;

EvalResult integrate_1d(const Integrand1D& f, const QuadratureSpec& spec = {});
EvalResult integrate_2d(const Integrand2D& f, const QuadratureSpec& spec = {});

struct MCSpec {
  int dimension = 4;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  bool stratification = true;
  // Per-axis substitution 1 - z = eta^m with eta uniform; m = 1 is plain sampling.
  // Larger m concentrates samples at z = 1 where the integrands in this library peak.
  double corner_stretch = 1.0;
};

struct McPoint {
  std::array<double, 4> z{};
  std::array<double, 4> zc{};  // 1 - z, exact
};
using IntegrandND = std::function<double(const McPoint&)>;

// Mean over [0,1]^dim; abs_error is three standard errors.
EvalResult mc_integrate(const IntegrandND& f, const MCSpec& spec);

// Tanh-sinh nodes on [0,1] at step h = 2^-level. Exposed for tests and benchmarks.
struct Node {
  double x, xc, w;
};
const std::vector<Node>& tanh_sinh_nodes(int level);

// 1 - prod(1 - u_i) computed from the complements u_i without cancellation.
double one_minus_product_of_complements(std::initializer_list<double> u);

}  // namespace hyperverify
