#include "hyperverify/hypergeometric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "hyperverify/errors.hpp"
#include "hyperverify/special_core.hpp"

namespace hyperverify {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Compensated (Neumaier) running sum.
struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  double abs_sum = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
    abs_sum += std::fabs(x);
  }
  double value() const { return sum + comp; }
};

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

bool within_tol(double err, double value, double tol) {
  return err <= tol * std::max(std::fabs(value), value == 0.0 ? 1.0 : 0.0);
}

}  // namespace

PfqParams AffinePfq::at(double d) const {
  PfqParams p;
  p.upper.reserve(upper.size());
  p.lower.reserve(lower.size());
  for (const Affine& a : upper) p.upper.push_back(a.at(d));
  for (const Affine& b : lower) p.lower.push_back(b.at(d));
  return p;
}

double convergence_margin(const PfqParams& p) {
  double s = 0.0;
  for (double b : p.lower) s += b;
  for (double a : p.upper) s -= a;
  return s;
}

std::optional<std::size_t> terminating_order(const PfqParams& p) {
  std::optional<std::size_t> n;
  for (double a : p.upper) {
    if (auto k = nonpositive_integer(a)) {
      const auto order = static_cast<std::size_t>(-*k);
      if (!n || order < *n) n = order;
    }
  }
  return n;
}

EvalResult pfq_at_1(const PfqParams& p, SeriesOptions opts) {
  if (p.upper.size() > p.lower.size() + 1) {
    throw InvalidParams("pFq at unit argument needs p <= q + 1");
  }
  const auto n_term = terminating_order(p);
  for (double b : p.lower) {
    if (auto k = nonpositive_integer(b)) {
      if (!n_term || static_cast<std::size_t>(-*k) < *n_term) {
        throw InvalidParams("lower parameter " + std::to_string(b) + " is a pole before termination");
      }
    }
  }

  std::vector<double> upper = p.upper;
  if (n_term) {
    // Snap the terminating parameter so the series stops exactly.
    for (double& a : upper) {
      if (auto k = nonpositive_integer(a); k && static_cast<std::size_t>(-*k) == *n_term) {
        a = static_cast<double>(*k);
        break;
      }
    }
    Neumaier acc;
    double t = 1.0;
    for (std::size_t k = 0; k <= *n_term; ++k) {
      acc.add(t);
      const double kk = static_cast<double>(k);
      for (double a : upper) t *= a + kk;
      for (double b : p.lower) t /= b + kk;
      t /= kk + 1.0;
    }
    const double v = acc.value();
    const double err = kEps * acc.abs_sum * static_cast<double>(*n_term + upper.size() + p.lower.size() + 2);
    return {v, err, *n_term + 1, true};
  }

  const bool balanced = p.upper.size() == p.lower.size() + 1;
  const double s = convergence_margin(p);
  if (balanced && s <= 0.0) {
    throw NoConvergence("pFq(1) diverges: margin " + std::to_string(s) + " <= 0");
  }
  const double scale = std::max(max_abs(p.upper), max_abs(p.lower));
  const auto k_asym = static_cast<std::size_t>(4.0 * scale) + 32;

  Neumaier acc;
  double t = 1.0;
  std::size_t k = 0;
  auto step = [&]() {
    acc.add(t);
    const double kk = static_cast<double>(k);
    for (double a : p.upper) t *= a + kk;
    for (double b : p.lower) t /= b + kk;
    t /= kk + 1.0;
    ++k;
  };

  if (!balanced) {
    // Factorial convergence: sum until the terms are negligible.
    while (k < opts.max_terms) {
      step();
      if (k > k_asym && std::fabs(t) <= 0.1 * opts.tol * std::fabs(acc.value())) {
        const double v = acc.value();
        return {v, std::fabs(t) + 4 * kEps * acc.abs_sum, k, true};
      }
    }
    throw NoConvergence("pFq(1) term cap reached");
  }

  // Richardson table on partial sums S_K at K = K0 * 2^j. The tail of S_K has an
  // expansion in K^-(s+n), n = 0, 1, 2, ...
  constexpr std::size_t kMaxOrder = 8;
  std::size_t checkpoint = 1;
  while (checkpoint < k_asym) checkpoint *= 2;
  std::vector<double> prev_row;
  std::vector<double> row;
  double best = 0.0;
  double best_err = std::numeric_limits<double>::infinity();
  double last_err = std::numeric_limits<double>::infinity();
  int stalls = 0;
  std::size_t level = 0;
  while (checkpoint <= opts.max_terms) {
    while (k < checkpoint) step();
    const double partial = acc.value();

    // Early exit when the plain tail bound t_K * K / s already meets tol.
    const double direct_tail = std::fabs(t) * static_cast<double>(k) / s;
    if (within_tol(direct_tail, partial, 0.1 * opts.tol)) {
      return {partial, direct_tail + 4 * kEps * acc.abs_sum, k, true};
    }

    row.assign(1, partial);
    const std::size_t order = std::min(level, kMaxOrder);
    for (std::size_t n = 1; n <= order; ++n) {
      const double r = std::exp2(-(s + static_cast<double>(n - 1)));
      row.push_back((row[n - 1] - r * prev_row[n - 1]) / (1.0 - r));
    }
    if (level > 0) {
      const double est = row.back();
      const double err = std::fabs(est - prev_row.back()) + 16 * kEps * acc.abs_sum;
      if (err < best_err) {
        best = est;
        best_err = err;
      }
      if (within_tol(err, est, opts.tol)) return {est, err, k, true};
      // Rounding noise floor reached: more terms will not help.
      stalls = err >= 0.5 * last_err ? stalls + 1 : 0;
      if (level >= 6 && stalls >= 2) break;
      last_err = err;
    }
    prev_row = row;
    ++level;
    checkpoint *= 2;
  }
  if (!(best_err < std::fabs(best))) {
    throw NoConvergence("pFq(1) extrapolation failed to settle");
  }
  return {best, best_err, k, within_tol(best_err, best, opts.tol)};
}

EvalResult gauss_2f1_series(double a, double b, double c, double z, SeriesOptions opts) {
  const PfqParams p{{a, b}, {c}};
  const auto n_term = terminating_order(p);
  // A terminating series is a polynomial, valid for every finite z.
  if (!n_term && !(std::fabs(z) < 1.0)) throw DomainError("2F1 power series needs |z| < 1");
  if (auto k = nonpositive_integer(c); k && (!n_term || static_cast<std::size_t>(-*k) < *n_term)) {
    throw InvalidParams("2F1 lower parameter is a non-positive integer");
  }
  Neumaier acc;
  double t = 1.0;
  const double scale = std::fabs(a) + std::fabs(b) + std::fabs(c);
  for (std::size_t k = 0; k < opts.max_terms; ++k) {
    acc.add(t);
    if (n_term && k == *n_term) {
      return {acc.value(), 4 * kEps * acc.abs_sum * static_cast<double>(k + 2), k + 1, true};
    }
    const double kk = static_cast<double>(k);
    const double ratio = (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    t *= ratio;
    if (t == 0.0) return {acc.value(), 4 * kEps * acc.abs_sum, k + 1, true};
    if (kk > 2.0 * scale + 4.0 && std::fabs(ratio) < 1.0) {
      const double tail = std::fabs(t) / (1.0 - std::fabs(ratio));
      if (within_tol(tail, acc.value(), opts.tol)) {
        const double v = acc.value();
        return {v, tail + 4 * kEps * acc.abs_sum, k + 1, true};
      }
    }
  }
  throw NoConvergence("2F1 series term cap reached");
}

Gauss2F1::Gauss2F1(double a, double b, double c, SeriesOptions opts)
    : a_(a), b_(b), c_(c), opts_(opts) {
  terminates_ = terminating_order(PfqParams{{a, b}, {c}});
  if (auto k = nonpositive_integer(c); k && (!terminates_ || static_cast<std::size_t>(-*k) < *terminates_)) {
    throw InvalidParams("2F1 lower parameter is a non-positive integer");
  }
  if (terminates_) return;
  m_ = c - a - b;
  const double r = std::round(m_);
  if (std::fabs(m_ - r) <= kPoleSnap) {
    m_int_ = static_cast<int>(r);
    return;
  }
  coef1_ = eval_gamma_product(GammaProduct{}.gamma(c).gamma(m_).over_gamma(c - a).over_gamma(c - b), 0.0).value;
  coef2_ = eval_gamma_product(GammaProduct{}.gamma(c).gamma(-m_).over_gamma(a).over_gamma(b), 0.0).value;
}

EvalResult Gauss2F1::operator()(double z) const {
  if (!(z < 1.0)) throw DomainError("2F1 evaluated at z >= 1");
  if (z == 0.0) return {1.0, 0.0, 1, true};
  if (terminates_ && z >= -1.0) return gauss_2f1_series(a_, b_, c_, z, opts_);
  if (std::fabs(z) <= 0.5) return gauss_2f1_series(a_, b_, c_, z, opts_);
  if (z > 0.5) return near_one(1.0 - z);
  return complement(1.0 - z);
}

EvalResult Gauss2F1::complement(double w) const {
  if (terminates_ && std::isfinite(w)) return gauss_2f1_series(a_, b_, c_, 1.0 - w, opts_);
  if (!(w > 0.0)) throw DomainError("2F1 evaluated at z >= 1");
  if (w > 1.5) {
    // Pfaff: F(a,b;c;z) = (1-z)^-a F(a, c-b; c; z/(z-1)); the new complement is 1/w.
    const Gauss2F1 pf(a_, c_ - b_, c_, opts_);
    const double zp = (w - 1.0) / w;
    EvalResult r = zp <= 0.5 ? pf(zp) : pf.near_one(1.0 / w);
    const double f = std::pow(w, -a_);
    r.value *= f;
    r.abs_error = r.abs_error * f + 4 * kEps * std::fabs(r.value) * (1.0 + std::fabs(a_ * std::log(w)));
    return r;
  }
  if (w >= 0.5) return gauss_2f1_series(a_, b_, c_, 1.0 - w, opts_);
  return near_one(w);
}

EvalResult Gauss2F1::near_one(double w) const {
  if (terminates_) return gauss_2f1_series(a_, b_, c_, 1.0 - w, opts_);
  if (m_int_) return near_one_integer(w);
  const EvalResult f1 = gauss_2f1_series(a_, b_, 1.0 - m_, w, opts_);
  const EvalResult f2 = gauss_2f1_series(c_ - a_, c_ - b_, 1.0 + m_, w, opts_);
  const double wm = std::pow(w, m_);
  const double t1 = coef1_ * f1.value;
  const double t2 = coef2_ * wm * f2.value;
  const double v = t1 + t2;
  const double err = std::fabs(coef1_) * f1.abs_error + std::fabs(coef2_ * wm) * f2.abs_error +
                     64 * kEps * (std::fabs(t1) + std::fabs(t2));
  return {v, err, f1.terms_used + f2.terms_used, within_tol(err, v, std::max(opts_.tol, 1e-13))};
}

// Logarithmic case c - a - b = m integer (Abramowitz & Stegun 15.3.10-15.3.12), w = 1 - z.
EvalResult Gauss2F1::near_one_integer(double w) const {
  const int m = *m_int_;
  const double a = a_;
  const double b = b_;
  const double lw = std::log(w);
  Neumaier finite;
  double coef_inf = 0.0;
  // Infinite sum: sum_n P_n w^n [lw - psi(n+1) - psi(n+|m|+1) + psi(x+n) + psi(y+n)], with
  // P_n = (x)_n (y)_n / (n! (n+|m|)!) and x, y depending on the sign of m.
  double x = a, y = b;
  const int am = std::abs(m);
  if (m == 0) {
    coef_inf = eval_gamma_product(GammaProduct{}.gamma(a + b).over_gamma(a).over_gamma(b), 0.0).value;
  } else if (m > 0) {
    x = a + m;
    y = b + m;
    // Finite part: Gamma(m)Gamma(c)/(Gamma(a+m)Gamma(b+m)) sum_{n<m} (a)_n(b)_n/(n!(1-m)_n) w^n.
    const double cf = eval_gamma_product(GammaProduct{}.gamma(m).gamma(c_).over_gamma(a + m).over_gamma(b + m), 0.0).value;
    double t = 1.0;
    for (int n = 0; n < m; ++n) {
      finite.add(cf * t);
      t *= (a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n)) * w;
    }
    // - Gamma(c)/(Gamma(a)Gamma(b)) (-w)^m times the log sum.
    coef_inf = -eval_gamma_product(GammaProduct{}.gamma(c_).over_gamma(a).over_gamma(b), 0.0).value *
               std::pow(-w, m);
  } else {
    // Finite part: Gamma(|m|)Gamma(c)/(Gamma(a)Gamma(b)) w^-|m| sum_{n<|m|} (a-|m|)_n(b-|m|)_n/(n!(1-|m|)_n) w^n.
    const double cf = eval_gamma_product(GammaProduct{}.gamma(am).gamma(c_).over_gamma(a).over_gamma(b), 0.0).value *
                      std::pow(w, -am);
    double t = 1.0;
    for (int n = 0; n < am; ++n) {
      finite.add(cf * t);
      t *= (a - am + n) * (b - am + n) / ((n + 1.0) * (1.0 - am + n)) * w;
    }
    coef_inf = -((am % 2 == 0) ? 1.0 : -1.0) *
               eval_gamma_product(GammaProduct{}.gamma(c_).over_gamma(a - am).over_gamma(b - am), 0.0).value;
  }

  Neumaier inf;
  std::size_t used = 0;
  if (coef_inf != 0.0) {
    double p = 1.0;
    for (int i = 1; i <= am; ++i) p /= i;  // 1/|m|!
    double psi_n1 = digamma(1.0);
    double psi_nm1 = digamma(am + 1.0);
    double psi_x = digamma(x);
    double psi_y = digamma(y);
    const double scale = std::fabs(x) + std::fabs(y) + am;
    for (std::size_t n = 0; n < opts_.max_terms; ++n) {
      const double bracket = (m == 0) ? (2.0 * psi_n1 - psi_x - psi_y - lw) : (lw - psi_n1 - psi_nm1 + psi_x + psi_y);
      const double term = p * bracket;
      inf.add(term);
      ++used;
      const double nn = static_cast<double>(n);
      psi_n1 += 1.0 / (nn + 1.0);
      psi_nm1 += 1.0 / (nn + am + 1.0);
      psi_x += 1.0 / (x + nn);
      psi_y += 1.0 / (y + nn);
      p *= (x + nn) * (y + nn) / ((nn + 1.0) * (nn + am + 1.0)) * w;
      if (p == 0.0) break;
      if (nn > scale + 4.0 && std::fabs(p) * (std::fabs(bracket) + 1.0) * 2.0 <=
                                   0.1 * opts_.tol * std::fabs(inf.value()) + 1e-300) {
        break;
      }
    }
  }
  const double t_inf = coef_inf * inf.value();
  const double v = finite.value() + t_inf;
  const double err = 64 * kEps * (finite.abs_sum + std::fabs(coef_inf) * inf.abs_sum);
  return {v, err, used, within_tol(err, v, std::max(opts_.tol, 1e-13))};
}

EvalResult gauss_2f1(double a, double b, double c, double z, SeriesOptions opts) {
  return Gauss2F1(a, b, c, opts)(z);
}

EvalResult gauss_2f1_complement(double a, double b, double c, double w, SeriesOptions opts) {
  return Gauss2F1(a, b, c, opts).complement(w);
}

EvalResult gauss_sum(double a, double b, double c) {
  if (!(c - a - b > 0.0)) throw DomainError("Gauss sum needs c - a - b > 0");
  return eval_gamma_product(GammaProduct{}.gamma(c).gamma(c - a - b).over_gamma(c - a).over_gamma(c - b), 0.0);
}

}  // namespace hyperverify
