#pragma once

#include <optional>
#include <vector>

#include "hyperverify/affine.hpp"
#include "hyperverify/eval_result.hpp"

namespace hyperverify {

struct PfqParams {
  std::vector<double> upper;
  std::vector<double> lower;
};

// Parameter tuple with entries affine in d.
struct AffinePfq {
  std::vector<Affine> upper;
  std::vector<Affine> lower;

  PfqParams at(double d) const;
};

// s = sum(lower) - sum(upper).
double convergence_margin(const PfqParams& p);

// Index of the last non-zero term when some upper parameter is a non-positive integer.
std::optional<std::size_t> terminating_order(const PfqParams& p);

// pFq(upper; lower; 1). Slowly converging series (small margin) are accelerated by
// Richardson extrapolation of dyadic partial sums with the known tail exponents s, s+1, ...
EvalResult pfq_at_1(const PfqParams& p, SeriesOptions opts = {});

// Plain Maclaurin series of 2F1 for |z| < 1, no transformations.
EvalResult gauss_2f1_series(double a, double b, double c, double z, SeriesOptions opts = {});

// 2F1(a,b;c;z) for real z < 1.
EvalResult gauss_2f1(double a, double b, double c, double z, SeriesOptions opts = {});

// 2F1(a,b;c;1-w) for w in (0, inf); keeps full relative accuracy in w as z -> 1.
EvalResult gauss_2f1_complement(double a, double b, double c, double w, SeriesOptions opts = {});

// Gauss summation Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)).
EvalResult gauss_sum(double a, double b, double c);

// 2F1 with fixed parameters; the connection coefficients at z = 1 are computed once.
// Used inside quadrature loops.
class Gauss2F1 {
 public:
  Gauss2F1(double a, double b, double c, SeriesOptions opts = {});

  EvalResult operator()(double z) const;
  // Argument given by its complement w = 1 - z.
  EvalResult complement(double w) const;

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

 private:
  EvalResult near_one(double w) const;
  EvalResult near_one_integer(double w) const;

  double a_, b_, c_;
  SeriesOptions opts_;
  std::optional<std::size_t> terminates_;
  double m_ = 0.0;            // c - a - b
  std::optional<int> m_int_;  // set when c - a - b is an integer
  double coef1_ = 0.0;        // Gamma(c)Gamma(m)/(Gamma(c-a)Gamma(c-b))
  double coef2_ = 0.0;        // Gamma(c)Gamma(-m)/(Gamma(a)Gamma(b))
};

}  // namespace hyperverify
