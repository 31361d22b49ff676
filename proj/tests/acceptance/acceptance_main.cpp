// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hyperverify/appell.hpp"
#include "hyperverify/errors.hpp"
#include "hyperverify/hypergeometric.hpp"
#include "hyperverify/identity_harness.hpp"
#include "hyperverify/transforms.hpp"

using namespace hyperverify;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("criterion %d %s: %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Uniform d in [0, 0.95] restricted to the check's validity domain.
double random_d(const IdentityCheck& c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 0.95);
  for (;;) {
    const double d = u(rng);
    if (c.validity.contains(d)) return d;
  }
}

void criterion1() {
  const auto t0 = Clock::now();
  const double r = rhs_main(0.0).value, l = lhs_main(0.0).value;
  const double t = seconds_since(t0);
  const bool ok = std::fabs(r - 0.125) <= 1e-12 && std::fabs(l - 0.125) <= 1e-12 && t < 1.0;
  report(1, ok, fmt("rhs %.17g lhs %.17g, %.3f s", r, l, t));
}

void criterion2() {
  const auto t0 = Clock::now();
  int bad = 0;
  double worst = 0.0;
  for (double d : {0.1, 0.25, 0.3, 0.4, 0.5, 0.6, 0.65, 0.7, 0.75, 0.9}) {
    const double tol = d >= 0.9 ? 1e-4 : 1e-6;
    const CheckReport r = check("main", d, tol);
    if (r.verdict != Verdict::pass) {
      ++bad;
      std::printf("  main d=%g verdict %s rel %.3g\n", d, std::string(to_string(r.verdict)).c_str(), r.rel_diff);
    }
    worst = std::max(worst, r.rel_diff);
  }
  const double t = seconds_since(t0);
  report(2, bad == 0 && t < 120.0, fmt("%d of 10 points failed, worst rel %.3g, %.1f s", bad, worst, t));
}

void criterion3() {
  std::vector<double> divergent_at;
  int other_errors = 0;
  for (int k = 1; k <= 99; ++k) {
    const double d = k / 100.0;
    try {
      (void)rhs_main(d);
    } catch (const DivergentError&) {
      divergent_at.push_back(d);
    } catch (const Error& e) {
      ++other_errors;
      std::printf("  d=%g raised %s\n", d, e.what());
    }
  }
  const bool ok = divergent_at.size() == 1 && std::fabs(divergent_at[0] - 0.8) < 1e-12 && other_errors == 0;
  std::string where;
  for (double d : divergent_at) where += fmt(" %g", d);
  report(3, ok, fmt("DivergentError at%s; %d other errors", where.empty() ? " none" : where.c_str(), other_errors));
}

// `n` checks of `id` at random in-domain d with relative tolerance `tol`.
int random_registry_checks(const char* id, int n, double tol, std::mt19937_64& rng) {
  const IdentityCheck& c = find_check(id);
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    const double d = random_d(c, rng);
    const CheckReport r = check(id, d, tol);
    if (r.verdict != Verdict::pass) {
      if (++bad <= 3) std::printf("  %s d=%.17g %s rel %.3g %s\n", id, d, std::string(to_string(r.verdict)).c_str(), r.rel_diff, r.note.c_str());
    }
  }
  return bad;
}

void criterion4() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(4);
  std::string detail;
  int bad_total = 0;
  for (const char* id : {"A.0", "A.2", "3.00", "A.6", "A.7"}) {
    const int bad = random_registry_checks(id, 100, 1e-9, rng);
    bad_total += bad;
    detail += fmt("%s %d/100, ", id, 100 - bad);
  }

  // Generic parameter sets for the two 2F1 transformations as well.
  std::uniform_real_distribution<double> u(0.05, 1.5), uz(-0.9, 0.95);
  int generic_bad = 0;
  for (int i = 0; i < 100; ++i) {
    const double a = u(rng), b = u(rng), c = a + b + 0.05 + u(rng) * (i % 2 == 0 ? 1.0 : -0.7);
    const double z = uz(rng);
    if (std::fabs(c - a - b - std::round(c - a - b)) < 1e-3 || c <= 0.05) continue;
    const double want = gauss_2f1(a, b, c, z).value;
    if (rel(euler_transform(a, b, c, z).value, want) > 1e-9) ++generic_bad;
    if (z > 0.0 && rel(connection_formula(a, b, c, z).value, want) > 1e-9) ++generic_bad;
  }
  bad_total += generic_bad;
  detail += fmt("generic A.0/A.2 mismatches %d, ", generic_bad);

  const CheckReport a1 = check("A.1", 0.6, 1e-8);
  const CheckReport a3a = check("A.3", 0.7, 1e-7);
  const CheckReport a3b = check("A.3", 0.75, 1e-7);
  const bool quad_ok = a1.verdict == Verdict::pass && a3a.verdict == Verdict::pass && a3b.verdict == Verdict::pass;
  detail += fmt("A.1 rel %.2g, A.3 rel %.2g/%.2g, ", a1.rel_diff, a3a.rel_diff, a3b.rel_diff);
  const double t = seconds_since(t0);
  report(4, bad_total == 0 && quad_ok && t < 60.0, detail + fmt("%.1f s", t));
}

void criterion5() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 1.6);
  int bad4 = 0, bad51 = 0, a5_holds = 0;
  for (int i = 0; i < 100; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const AffinePfq t{{a, b, c}, {a + 0.3 + u(rng), b + c + 0.3 + u(rng)}};
    const double want = pfq_at_1(t.at(0.0)).value;
    if (rel(evaluate(thomae_a4(t)).value, want) > 1e-9) ++bad4;
    if (rel(evaluate(thomae_a51(t)).value, want) > 1e-9) ++bad51;
    if (rel(evaluate(thomae_a5(t)).value, want) <= 1e-9) ++a5_holds;
  }
  bad4 += random_registry_checks("A.4", 20, 1e-9, rng);
  bad51 += random_registry_checks("A.51", 20, 1e-9, rng);

  const CheckReport a5 = check("A.5", 0.3);
  const bool definite = a5.verdict == Verdict::pass || a5.verdict == Verdict::fail;
  const std::string a5_text = fmt("A.5 at d=0.3: %s (rel %.3g); holds on %d/100 random tuples, %s",
                                  std::string(to_string(a5.verdict)).c_str(), a5.rel_diff, a5_holds,
                                  a5.verdict == Verdict::fail ? "recorded as an erratum in the prefactor" : "holds as printed");
  report(5, bad4 == 0 && bad51 == 0 && definite,
         fmt("A.4 %d bad, A.51 %d bad (120 checks each); ", bad4, bad51) + a5_text);
}

void criterion6() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double alpha = 0.2 + 1.5 * u01(rng);
    const AppellParams p{alpha, -0.8 + 2.0 * u01(rng), -0.8 + 2.0 * u01(rng), alpha + 0.3 + 2.0 * u01(rng),
                         -0.8 + 1.6 * u01(rng), -0.8 + 1.6 * u01(rng)};
    const double r = rel(f1_series(p).value, f1_integral(p).value);
    worst = std::max(worst, r);
    if (r > 1e-8) ++bad;
  }
  int bad_red = 0;
  double worst_red = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double a = 0.1 + 2.0 * u01(rng), b = -0.8 + 2.0 * u01(rng), b2 = -0.8 + 2.0 * u01(rng);
    const double g = 0.3 + 2.5 * u01(rng), x = -0.8 + 1.6 * u01(rng);
    const double r = rel(f1_series({a, b, b2, g, x, x}).value, gauss_2f1(a, b + b2, g, x).value);
    worst_red = std::max(worst_red, r);
    if (r > 1e-9) ++bad_red;
  }
  report(6, bad == 0 && bad_red == 0,
         fmt("series vs integral %d/100 bad (worst %.2g); reduction %d/50 bad (worst %.2g)", bad, worst, bad_red, worst_red));
}

void criterion7() {
  const auto t0 = Clock::now();
  int bad = 0, ran = 0;
  std::string detail;
  for (const char* id : {"quad4d", "J1a-integral", "J1b-integral", "J2-integral"}) {
    for (double d : {0.3, 0.65}) {
      const CheckReport r = check(id, d);  // 1e7 samples, seed 42, abs_error = 3 sigma
      if (r.verdict == Verdict::skipped_out_of_domain) continue;
      ++ran;
      const bool ok = r.verdict == Verdict::pass;
      if (!ok) ++bad;
      const double sigmas = r.abs_diff / std::max((r.lhs_err + r.rhs_err) / 3.0, 1e-300);
      detail += fmt("%s@%g %.2f sigma; ", id, d, sigmas);
    }
  }
  const double t = seconds_since(t0);
  report(7, bad == 0 && ran == 8 && t < 600.0, detail + fmt("%.1f s", t));
}

void criterion8() {
  const auto t0 = Clock::now();
  const IdentityCheck& c = find_check("assembly");
  int bad = 0, ran = 0;
  double worst = 0.0;
  for (double d : default_grid()) {
    if (!c.validity.contains(d)) continue;
    ++ran;
    const CheckReport r = check("assembly", d, 1e-9);
    worst = std::max(worst, r.rel_diff);
    if (r.verdict != Verdict::pass) ++bad;
  }
  const double t = seconds_since(t0);
  report(8, bad == 0 && ran > 0 && t < 10.0, fmt("%d grid points, %d failed, worst rel %.2g, %.2f s", ran, bad, worst, t));
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = pclose(p);
  return out;
}

void criterion9() {
  const std::string cmd = std::string("'") + HYPERVERIFY_BIN + "' sweep --seed 42";
  int s1 = 0, s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  report(9, s1 == 0 && s2 == 0 && !a.empty() && a == b,
         fmt("two runs: %zu and %zu bytes, %s, exit %d/%d", a.size(), b.size(), a == b ? "identical" : "different", s1, s2));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
