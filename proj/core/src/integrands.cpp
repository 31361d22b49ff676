#include "hyperverify/integrands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>

#include "hyperverify/errors.hpp"
#include "hyperverify/special_core.hpp"

namespace hyperverify::integrands {

namespace {

double gamma_ratio(const GammaProduct& g) { return eval_gamma_product(g, 0.0).value; }

// 1 - prod(1 - u_i) from the complements.
double om(double u, double v) { return u + v - u * v; }
double om(double u, double v, double w) { return one_minus_product_of_complements({u, v, w}); }

// The tensor rule visits each row (fixed outer coordinate) contiguously, so a 2F1 of that
// coordinate is memoised per thread.
// Keyed by a per-integrand tag rather than an address, which the allocator may reuse.
struct RowMemo {
  std::uint64_t owner = 0;
  bool complement = false;
  double s = -1.0;
  double value = 0.0;
};
thread_local RowMemo row_memo;

std::atomic<std::uint64_t> next_tag{1};

struct Tagged {
  Gauss2F1 f;
  std::uint64_t tag;
  Tagged(double a, double b, double c) : f(a, b, c), tag(next_tag++) {}
};

double memo_eval(const Tagged& t, double s, bool complement) {
  if (row_memo.owner != t.tag || row_memo.complement != complement || row_memo.s != s) {
    row_memo = {t.tag, complement, s, complement ? t.f.complement(s).value : t.f(s).value};
  }
  return row_memo.value;
}

double memo_complement(const Tagged& t, double s) { return memo_eval(t, s, true); }

// Terms of main_duffy that do not involve F.
double duffy_weight(double d, double s, double sc, double t, double one_st) {
  const double g = std::pow(1.0 + t * sc, -d);
  return std::pow(s, 1.0 - d) * g *
         (std::pow(sc, 3.0 - 3.0 * d) * std::pow(one_st, 1.0 - d) +
          std::pow(one_st, 3.0 - 3.0 * d) * std::pow(sc, 1.0 - d));
}

}  // namespace

double eval_at(const Gauss2F1& f, double z, double zc) {
  if (z <= 0.5) return f(z).value;
  // zc can underflow to 0 at the outermost quadrature nodes.
  return f.complement(std::max(zc, std::numeric_limits<double>::min())).value;
}

Integrand2D main_duffy(double d) {
  auto F = std::make_shared<const Tagged>(1.0, d, 2.0 - d);
  return [F, d](const Point2& p) {
    const double s = p.x, sc = p.xc, t = p.y, tc = p.yc;
    const double st = s * t;
    if (st == 0.0) return 0.0;  // underflow at the extreme nodes
    const double one_st = sc + s * tc;
    return duffy_weight(d, s, sc, t, one_st) * memo_complement(*F, s) * F->f.complement(st).value;
  };
}

double main_corner_coefficient(double d) {
  const double a = gamma_ratio(GammaProduct{}.gamma(2.0 - d).gamma(2.0 * d - 1.0).over_gamma(d));
  return 2.0 * a * a;
}

Integrand2D main_subtracted(double d) {
  if (!(d > 0.5 && d < 1.0)) throw DomainError("corner subtraction needs 1/2 < d < 1");
  // F(1-u) = A u^(1-2d) (1-u)^(d-1) + B Q(u),  Q = 2F1(1, d; 2d; u).
  const double A = gamma_ratio(GammaProduct{}.gamma(2.0 - d).gamma(2.0 * d - 1.0).over_gamma(d));
  const double B = gamma_ratio(
      GammaProduct{}.gamma(2.0 - d).gamma(1.0 - 2.0 * d).over_gamma(1.0 - d).over_gamma(2.0 - 2.0 * d));
  auto F = std::make_shared<const Tagged>(1.0, d, 2.0 - d);
  auto Q = std::make_shared<const Tagged>(1.0, d, 2.0 * d);
  const double c = 2.0 * A * A;
  return [=](const Point2& p) {
    const double s = p.x, sc = p.xc, t = p.y, tc = p.yc;
    if (s == 0.0 || t == 0.0) return 0.0;
    const double st = s * t;
    const double one_st = sc + s * tc;
    const double lead = std::pow(s, 3.0 - 5.0 * d) * std::pow(t, 1.0 - 2.0 * d) * std::pow(1.0 + t, -d);
    if (s >= 0.5) {
      const double h = duffy_weight(d, s, sc, t, one_st) * memo_complement(*F, s) * F->f.complement(st).value;
      return h - c * lead;
    }
    // Leading part of H is A^2 s^(3-5d) t^(1-2d) (1+t sc)^-d ((1-U)^(2-2d) + (1-V)^(2-2d)), with
    // U = s, V = st; (1+t sc)^-d = (1+t)^-d (1 - ts/(1+t))^-d.
    const double shift = -d * std::log1p(-t * s / (1.0 + t));
    const double e1 = std::expm1(shift + (2.0 - 2.0 * d) * std::log1p(-s));
    const double e2 = std::expm1(shift + (2.0 - 2.0 * d) * std::log1p(-st));
    const double part1 = A * A * lead * (e1 + e2);

    const double qu = memo_eval(*Q, s, false);
    const double qv = Q->f(st).value;
    const double pu = std::pow(sc, d - 1.0), pv = std::pow(one_st, d - 1.0);
    const double r = A * B * (std::pow(s, 1.0 - 2.0 * d) * pu * qv + std::pow(st, 1.0 - 2.0 * d) * pv * qu) +
                     B * B * qu * qv;
    const double w = std::pow(sc, 3.0 - 3.0 * d) * std::pow(one_st, 1.0 - d) +
                     std::pow(one_st, 3.0 - 3.0 * d) * std::pow(sc, 1.0 - d);
    const double part2 = std::pow(s, 1.0 - d) * std::pow(1.0 + t * sc, -d) * r * w;
    return part1 + part2;
  };
}

Integrand2D i2a_2d(double d) {
  const double pre = gamma_ratio(GammaProduct{}.gamma(2.0 - d).gamma(2.0 * d - 1.0).over_gamma(d)) /
                     ((d - 1.0) * (d - 1.0));
  auto F = std::make_shared<const Tagged>(1.0, d, 2.0 - d);
  return [F, d, pre](const Point2& q) {
    // Outer tensor rows run over q.x; put y there so F(y) is memoised per row.
    const Point2 p{q.y, q.yc, q.x, q.xc};
    if (p.x == 0.0 || p.y == 0.0) return 0.0;
    const double w = om(p.xc, p.yc);
    return pre * std::pow(p.x, 2.0 - 2.0 * d) * std::pow(p.xc, 1.0 - 2.0 * d) * std::pow(p.y, 1.0 - d) *
           std::pow(w, -d) * memo_complement(*F, p.yc);
  };
}

Integrand2D i2b_2d(double d) {
  const double pre = gamma_ratio(GammaProduct{}.gamma(1.0 - 2.0 * d).over_gamma(2.0 - 2.0 * d)) / (d - 1.0);
  auto F = std::make_shared<const Tagged>(1.0, d, 2.0 - d);
  auto G = std::make_shared<const Gauss2F1>(d, 2.0 * d - 1.0, 2.0 * d);
  return [F, G, d, pre](const Point2& q) {
    // Outer tensor rows run over q.x; put y there so F(y) is memoised per row.
    const Point2 p{q.y, q.yc, q.x, q.xc};
    if (p.x == 0.0 || p.y == 0.0) return 0.0;
    const double w = om(p.xc, p.yc);
    const double arg = p.xc / w, argc = p.x * p.yc / w;
    return pre * std::pow(p.x, 2.0 - 2.0 * d) * std::pow(p.y, 1.0 - d) * std::pow(w, 1.0 - 3.0 * d) *
           eval_at(*G, arg, argc) * memo_complement(*F, p.yc);
  };
}

Integrand2D j2_2d(double d) {
  const double pre = 1.0 / ((1.0 - d) * (1.0 - d));
  auto F = std::make_shared<const Tagged>(1.0, d, 2.0 - d);
  return [F, d, pre](const Point2& q) {
    // Outer tensor rows run over q.x; put y there so F(y) is memoised per row.
    const Point2 p{q.y, q.yc, q.x, q.xc};
    if (p.x == 0.0 || p.y == 0.0) return 0.0;
    const double w = om(p.xc, p.yc);
    const double arg = p.x * p.yc / w, argc = p.xc / w;
    return pre * std::pow(p.x, 3.0 - 3.0 * d) * std::pow(p.y, 1.0 - d) * std::pow(w, -2.0 * d) *
           std::pow(p.yc, 1.0 - d) * memo_complement(*F, p.yc) * eval_at(F->f, arg, argc);
  };
}

Integrand1D j1_1d(double d) {
  const double pre = 1.0 / ((1.0 - d) * (1.0 - d) * (4.0 - 5.0 * d));
  auto F = std::make_shared<const Gauss2F1>(1.0, d, 2.0 - d);
  auto G = std::make_shared<const Gauss2F1>(d, 1.0 - d, 2.0 - d);
  return [F, G, d, pre](double w, double wc) {
    if (w == 0.0) return 0.0;
    return pre * std::pow(w, 2.0 - 3.0 * d) * eval_at(*G, w, wc) * eval_at(*F, w, wc);
  };
}

IntegrandND quad4d(double d) {
  return [d](const McPoint& p) {
    const double z2 = p.z[0], z3 = p.z[1], z4 = p.z[2];
    const double u2 = p.zc[0], u3 = p.zc[1], u4 = p.zc[2], u5 = p.zc[3];
    const double prod = om(u2, u3) * om(u3, u4) * om(u2, u3, u4) * om(u3, u4, u5) * om(u4, u5);
    return std::pow(z2, 3.0 - 3.0 * d) * std::pow(z3, 2.0 - d) * z4 * std::pow(prod, -d);
  };
}

IntegrandND j1_3d(double d) {
  auto F = std::make_shared<const Gauss2F1>(1.0, d, 2.0 - d);
  const double pre = 1.0 / (1.0 - d);
  return [F, d, pre](const McPoint& p) {
    const double z2 = p.z[0], z3 = p.z[1];
    const double u2 = p.zc[0], u3 = p.zc[1], u5 = p.zc[2];
    const double w23 = om(u2, u3), w35 = om(u3, u5), w235 = om(u2, u3, u5);
    const double arg = z2 * w35 / w235, argc = u2 / w235;
    return pre * std::pow(z2, 3.0 - 3.0 * d) * std::pow(z3, 1.0 - d) * std::pow(w23 * w235 * u5, -d) *
           std::pow(w35, 1.0 - 2.0 * d) * eval_at(*F, arg, argc);
  };
}

IntegrandND j2_3d(double d) {
  auto F = std::make_shared<const Gauss2F1>(1.0, d, 2.0 - d);
  const double pre = 1.0 / (1.0 - d);
  return [F, d, pre](const McPoint& p) {
    const double z2 = p.z[0], z3 = p.z[1];
    const double u2 = p.zc[0], u3 = p.zc[1], u5 = p.zc[2];
    const double w23 = om(u2, u3), w35 = om(u3, u5);
    const double arg = z2 * u3 / w23, argc = u2 / w23;
    return pre * std::pow(z2, 3.0 - 3.0 * d) * std::pow(z3, 1.0 - d) * std::pow(u3, 1.0 - d) *
           std::pow(w23, -2.0 * d) * std::pow(w35 * u5, -d) * eval_at(*F, arg, argc);
  };
}

IntegrandND i1_3d(double d) {
  auto F = std::make_shared<const Gauss2F1>(1.0, d, 2.0 - d);
  const double pre = 1.0 / (d - 1.0);
  return [F, d, pre](const McPoint& p) {
    const double z2 = p.z[0], z3 = p.z[1];
    const double u2 = p.zc[0], u3 = p.zc[1], u4 = p.zc[2];
    const double w23 = om(u2, u3), w34 = om(u3, u4), w234 = om(u2, u3, u4);
    const double arg = z3 * u4 / w34, argc = u3 / w34;
    return pre * std::pow(z2, 3.0 - 3.0 * d) * std::pow(z3, 2.0 - d) * std::pow(w23 * w234, -d) *
           std::pow(w34, -2.0 * d) * std::pow(u4, 1.0 - d) * eval_at(*F, arg, argc);
  };
}

}  // namespace hyperverify::integrands
