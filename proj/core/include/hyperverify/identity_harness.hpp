#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperverify/eval_result.hpp"
#include "hyperverify/quadrature.hpp"

namespace hyperverify {

enum class Verdict { pass, fail, skipped_out_of_domain, divergent };
std::string_view to_string(Verdict v);

// fast: default sweep. slow: Monte Carlo, opt-in. exploratory: erratum probes and
// continuation experiments, never part of a sweep.
enum class CheckKind { fast, slow, exploratory };
std::string_view to_string(CheckKind k);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;
};

struct Validity {
  std::vector<Interval> intervals;
  std::vector<double> excluded_points;
  double exclusion_radius = 1e-9;

  bool contains(double d) const;
};

struct CheckConfig {
  QuadratureSpec quad2d;
  MCSpec mc;
};

using SideEvaluator = std::function<EvalResult(double d, const CheckConfig&)>;

struct IdentityCheck {
  std::string id;
  std::string description;
  SideEvaluator lhs;
  SideEvaluator rhs;
  Validity validity;
  double default_tol = 1e-9;
  CheckKind kind = CheckKind::fast;
  // Tolerance used instead of default_tol from this d upwards (main at d >= 0.9).
  std::optional<std::pair<double, double>> widened_tol;
};

struct CheckReport {
  std::string id;
  double d = 0.0;
  double lhs_value = 0.0;
  double lhs_err = 0.0;
  double rhs_value = 0.0;
  double rhs_err = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  double tol = 0.0;
  Verdict verdict = Verdict::fail;
  std::string note;  // exception text for skipped/divergent outcomes
};

inline constexpr double kTolAbsFloor = 1e-14;

const std::vector<IdentityCheck>& registry();
const IdentityCheck& find_check(std::string_view id);

CheckConfig default_check_config();
std::vector<double> default_grid();

// Closed forms of the main identity and of its intermediates.
EvalResult rhs_main(double d);
// Double integral on the left of the main identity. For d > 0.8 the integral diverges at
// the corner (1,1); the analytic continuation in d (Hadamard finite part) is returned.
EvalResult lhs_main(double d, const QuadratureSpec& spec = default_check_config().quad2d);
// The same value through the corner-subtracted integrand plus its analytic corner term.
// Valid on (1/2, 1) minus the band around 0.8; on (1/2, 0.78] it equals the plain integral.
EvalResult lhs_main_continued(double d, const QuadratureSpec& spec = default_check_config().quad2d);

EvalResult i1_closed(double d);
EvalResult i2a_closed(double d);
EvalResult i2b_closed(double d);
EvalResult j1a_closed(double d);
EvalResult j1b_closed(double d);
EvalResult j2_closed(double d);
// (d-1)^2 (J1a - J1b - J2 - I1 + I2a - I2b)
EvalResult assembly_rhs(double d);

CheckReport check(std::string_view id, double d, std::optional<double> tol = std::nullopt,
                  const CheckConfig& config = default_check_config());
CheckReport check_multi_integral(std::string_view id, double d, const MCSpec& mc);

struct SweepOptions {
  bool include_slow = false;
  CheckConfig config = default_check_config();
};

// Every fast (and optionally slow) check at every grid point, ordered by id then d.
std::vector<CheckReport> sweep(std::span<const double> grid, std::optional<double> tol = std::nullopt,
                               const SweepOptions& options = {});

Verdict judge(double lhs, double lhs_err, double rhs, double rhs_err, double tol);

}  // namespace hyperverify
