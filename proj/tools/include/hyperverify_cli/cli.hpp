#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperverify/identity_harness.hpp"

namespace hyperverify::cli {

enum class OutputFormat { csv, json };

struct RunConfig {
  std::vector<double> grid = default_grid();
  std::optional<double> tol;  // empty: each check's own default
  std::uint64_t mc_samples = 10'000'000;
  std::uint64_t seed = 42;
  bool slow_checks = false;
  OutputFormat output_format = OutputFormat::csv;
  std::optional<std::string> output_path;
};

// Thrown for anything that should end with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "0,0.1,0.25" -> {0, 0.1, 0.25}
std::vector<double> parse_grid(std::string_view text);

// Flat `key = value` lines, keys named after RunConfig fields; '#' starts a comment.
void apply_config_text(std::string_view text, RunConfig& cfg);
void apply_config_file(const std::string& path, RunConfig& cfg);

// Throws UsageError when an invariant is violated.
void validate(const RunConfig& cfg);

inline constexpr std::string_view kCsvHeader = "id,d,lhs,lhs_err,rhs,rhs_err,abs_diff,rel_diff,tol,verdict";

std::string format_csv(const std::vector<CheckReport>& reports);
std::string format_json(const std::vector<CheckReport>& reports);
std::string format_reports(const std::vector<CheckReport>& reports, OutputFormat f);

// The whole command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperverify::cli
