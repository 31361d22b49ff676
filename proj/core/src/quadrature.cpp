#include "hyperverify/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <thread>

#include "hyperverify/errors.hpp"

namespace hyperverify {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxLevel = 12;
constexpr int kFirstLevel = 3;
// Abscissae beyond |t| = 6 sit within 1e-275 of the endpoints.
constexpr double kTMax = 6.0;

// Tanh-sinh node at parameter t; weight excludes the step h.
Node node_at(double t) {
  const double v = std::numbers::pi * std::sinh(t);
  const double e = std::exp(-std::fabs(v));
  const double small = e / (1.0 + e);
  const double large = 1.0 / (1.0 + e);
  Node n{};
  n.x = v >= 0 ? large : small;
  n.xc = v >= 0 ? small : large;
  n.w = std::numbers::pi * std::cosh(t) * small * large;
  return n;
}

std::vector<std::vector<Node>> build_tables() {
  std::vector<std::vector<Node>> tables(kMaxLevel + 1);
  for (int level = 0; level <= kMaxLevel; ++level) {
    const double h = std::ldexp(1.0, -level);
    const long n = std::lround(kTMax / h);
    auto& nodes = tables[level];
    nodes.reserve(2 * n + 1);
    for (long j = -n; j <= n; ++j) nodes.push_back(node_at(static_cast<double>(j) * h));
  }
  return tables;
}

const std::vector<std::vector<Node>>& tables() {
  static const std::vector<std::vector<Node>> t = build_tables();
  return t;
}

// Runs body(i) for i in [0, n) on a fixed number of chunks. Each body writes only
// to its own slot, so results never depend on the worker count.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (hw == 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  const std::size_t chunk = (n + hw - 1) / hw;
  for (unsigned w = 0; w < hw; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : workers) t.join();
}

double finite_or_zero(double v) { return std::isfinite(v) ? v : 0.0; }

void check_spec(const QuadratureSpec& spec, int dimension) {
  if (spec.levels < 1) throw InvalidParams("quadrature levels must be >= 1");
  if (spec.dimension != dimension) throw InvalidParams("quadrature spec dimension mismatch");
  for (const auto& e : spec.endpoint_exponents) {
    if (!(e.lo > -1.0) || !(e.hi > -1.0)) throw DomainError("endpoint exponent <= -1 is not integrable");
  }
}

bool settled(double diff, double value, double tol) {
  return diff <= tol * std::max(std::fabs(value), 1e-300);
}

}  // namespace

const std::vector<Node>& tanh_sinh_nodes(int level) {
  if (level < 0 || level > kMaxLevel) throw InvalidParams("tanh-sinh level out of range");
  return tables()[level];
}

double one_minus_product_of_complements(std::initializer_list<double> u) {
  double s = 0.0;
  for (double v : u) s += std::log1p(-v);
  return -std::expm1(s);
}

EvalResult integrate_1d(const Integrand1D& f, const QuadratureSpec& spec) {
  check_spec(spec, 1);
  const int top = std::min(std::max(spec.levels, kFirstLevel), kMaxLevel);
  double raw = 0.0;
  double raw_abs = 0.0;
  double prev = 0.0;
  std::size_t evals = 0;
  for (int level = kFirstLevel; level <= top; ++level) {
    const auto& nodes = tanh_sinh_nodes(level);
    const bool first = level == kFirstLevel;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (!first && j % 2 == 0) continue;  // already counted at the coarser level
      const Node& n = nodes[j];
      if (n.w == 0.0 || n.x == 0.0 || n.xc == 0.0) continue;
      const double v = finite_or_zero(f(n.x, n.xc)) * n.w;
      raw += v;
      raw_abs += std::fabs(v);
      ++evals;
    }
    const double h = std::ldexp(1.0, -level);
    const double value = raw * h;
    if (!first) {
      const double diff = std::fabs(value - prev);
      const double err = diff + 8 * kEps * raw_abs * h;
      if (settled(err, value, spec.target_tol) && level >= kFirstLevel + 2) {
        return {value, err, evals, true};
      }
      if (level == top) {
        if (!settled(err, value, std::sqrt(spec.target_tol))) {
          throw NoConvergence("1D quadrature did not settle: diff " + std::to_string(diff));
        }
        return {value, err, evals, false};
      }
    }
    prev = value;
  }
  return {prev, std::fabs(prev), evals, false};
}

EvalResult integrate_2d(const Integrand2D& f, const QuadratureSpec& spec) {
  check_spec(spec, 2);
  const int top = std::min(std::max(spec.levels, kFirstLevel), kMaxLevel);

  auto eval = [&](const Node& a, const Node& b) -> double {
    if (a.w == 0.0 || b.w == 0.0 || a.x == 0.0 || a.xc == 0.0 || b.x == 0.0 || b.xc == 0.0) return 0.0;
    const double w = a.w * b.w;
    if (!spec.corner_at_one) return finite_or_zero(f({a.x, a.xc, b.x, b.xc})) * w;
    // s = a.x, t = b.x. Triangle 1: (1-x, 1-y) = (s, s t); triangle 2 swaps the roles.
    const double s = a.x;
    const double sc = a.xc;
    const double st = s * b.x;
    if (st == 0.0) return 0.0;  // underflow at the outermost nodes, weight is negligible
    const double one_minus_st = sc + s * b.xc;
    // Integrand values can overflow near the corner while the weighted value is negligible.
    const double sw = s * w;
    const double f1 = finite_or_zero(f({sc, s, one_minus_st, st}));
    const double f2 = finite_or_zero(f({one_minus_st, st, sc, s}));
    return finite_or_zero(f1 * sw + f2 * sw);
  };

  double raw = 0.0;
  double raw_abs = 0.0;
  double prev = 0.0;
  std::size_t evals = 0;
  std::vector<double> row_sum;
  std::vector<double> row_abs;
  for (int level = kFirstLevel; level <= top; ++level) {
    const auto& nodes = tanh_sinh_nodes(level);
    const bool first = level == kFirstLevel;
    const std::size_t n = nodes.size();
    row_sum.assign(n, 0.0);
    row_abs.assign(n, 0.0);
    parallel_for(n, [&](std::size_t i) {
      // Rows already on the coarse grid only need their new (odd) columns.
      const bool old_row = !first && i % 2 == 0;
      double s = 0.0, sa = 0.0;
      for (std::size_t j = old_row ? 1 : 0; j < n; j += old_row ? 2 : 1) {
        const double v = eval(nodes[i], nodes[j]);
        s += v;
        sa += std::fabs(v);
      }
      row_sum[i] = s;
      row_abs[i] = sa;
    });
    for (std::size_t i = 0; i < n; ++i) {
      raw += row_sum[i];
      raw_abs += row_abs[i];
    }
    evals += first ? n * n : n * n - ((n + 1) / 2) * ((n + 1) / 2);
    const double h = std::ldexp(1.0, -level);
    const double value = raw * h * h;
    if (!first) {
      const double diff = std::fabs(value - prev);
      const double err = diff + 8 * kEps * raw_abs * h * h;
      if (settled(err, value, spec.target_tol) && level >= kFirstLevel + 2) {
        return {value, err, evals, true};
      }
      if (level == top) {
        if (!settled(err, value, std::sqrt(spec.target_tol))) {
          throw NoConvergence("2D quadrature did not settle: diff " + std::to_string(diff));
        }
        return {value, err, evals, false};
      }
    }
    prev = value;
  }
  return {prev, std::fabs(prev), evals, false};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform double in (0,1), never 0 or 1.
double open_unit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

struct StratumStats {
  double mean = 0.0;
  double m2 = 0.0;
  std::uint64_t n = 0;
};

}  // namespace

EvalResult mc_integrate(const IntegrandND& f, const MCSpec& spec) {
  if (spec.dimension < 1 || spec.dimension > 4) throw InvalidParams("MC dimension must be 1..4");
  if (spec.samples < 10'000) throw InvalidParams("MC needs at least 1e4 samples");
  if (!(spec.corner_stretch >= 1.0)) throw InvalidParams("corner stretch must be >= 1");

  constexpr std::uint64_t kStrata = 64;
  const std::uint64_t pairs = spec.samples / 2;
  const int dim = spec.dimension;
  const double m = spec.corner_stretch;
  std::vector<StratumStats> stats(kStrata);

  auto sample = [&](const std::array<double, 4>& xi) {
    McPoint p;
    double weight = 1.0;
    for (int k = 0; k < dim; ++k) {
      const double eta = xi[k];
      const double u = m == 1.0 ? eta : std::pow(eta, m);
      if (m != 1.0) weight *= m * std::pow(eta, m - 1.0);
      p.zc[k] = u;
      p.z[k] = 1.0 - u;
    }
    return f(p) * weight;
  };

  parallel_for(kStrata, [&](std::size_t s) {
    std::mt19937_64 rng(splitmix64(spec.seed ^ splitmix64(s + 1)));
    const std::uint64_t count = pairs / kStrata + (s < pairs % kStrata ? 1 : 0);
    StratumStats st;
    std::array<double, 4> xi{};
    std::array<double, 4> anti{};
    for (std::uint64_t i = 0; i < count; ++i) {
      for (int k = 0; k < dim; ++k) {
        xi[k] = open_unit(rng);
        anti[k] = 1.0 - xi[k];
      }
      if (spec.stratification) {
        xi[0] = (static_cast<double>(s) + xi[0]) / kStrata;
        anti[0] = (static_cast<double>(s) + anti[0]) / kStrata;
      }
      const double g = 0.5 * (sample(xi) + sample(anti));
      ++st.n;
      const double delta = g - st.mean;
      st.mean += delta / static_cast<double>(st.n);
      st.m2 += delta * (g - st.mean);
    }
    stats[s] = st;
  });

  double value = 0.0;
  double var = 0.0;
  if (spec.stratification) {
    for (const auto& st : stats) {
      const double ns = static_cast<double>(st.n);
      value += st.mean / kStrata;
      var += (st.m2 / (ns - 1.0)) / ns / (kStrata * kStrata);
    }
  } else {
    // Pool the blocks (Chan et al. parallel variance merge).
    StratumStats all;
    for (const auto& st : stats) {
      if (st.n == 0) continue;
      const double na = static_cast<double>(all.n);
      const double nb = static_cast<double>(st.n);
      const double delta = st.mean - all.mean;
      const double n = na + nb;
      all.mean += delta * nb / n;
      all.m2 += st.m2 + delta * delta * na * nb / n;
      all.n += st.n;
    }
    value = all.mean;
    const double n = static_cast<double>(all.n);
    var = all.m2 / (n - 1.0) / n;
  }
  return {value, 3.0 * std::sqrt(var), 2 * pairs, true};
}

}  // namespace hyperverify
