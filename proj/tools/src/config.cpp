#include <charconv>
#include <fstream>
#include <sstream>

#include "hyperverify_cli/cli.hpp"

namespace hyperverify::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view s, std::string_view what) {
  s = trim(s);
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw UsageError("bad number for " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  s = trim(s);
  // Accept 1e7 style counts as well as plain integers.
  const double v = parse_double(s, what);
  if (v < 0 || v != static_cast<double>(static_cast<std::uint64_t>(v))) {
    throw UsageError("expected a non-negative integer for " + std::string(what));
  }
  return static_cast<std::uint64_t>(v);
}

bool parse_bool(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s == "on" || s == "true" || s == "1" || s == "yes") return true;
  if (s == "off" || s == "false" || s == "0" || s == "no") return false;
  throw UsageError("expected on/off for " + std::string(what));
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> g;
  text = trim(text);
  if (text.empty()) return g;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    g.push_back(parse_double(text.substr(start, comma - start), "grid"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return g;
}

void apply_config_text(std::string_view text, RunConfig& cfg) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view l = line;
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string_view key = trim(l.substr(0, eq));
    const std::string_view value = trim(l.substr(eq + 1));
    if (key == "grid") {
      cfg.grid = parse_grid(value);
    } else if (key == "tol") {
      cfg.tol = parse_double(value, key);
    } else if (key == "mc_samples") {
      cfg.mc_samples = parse_u64(value, key);
    } else if (key == "seed") {
      cfg.seed = parse_u64(value, key);
    } else if (key == "slow_checks") {
      cfg.slow_checks = parse_bool(value, key);
    } else if (key == "output_format") {
      if (value == "csv") cfg.output_format = OutputFormat::csv;
      else if (value == "json") cfg.output_format = OutputFormat::json;
      else throw UsageError("output_format must be csv or json");
    } else if (key == "output_path") {
      cfg.output_path = std::string(value);
    } else {
      throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + std::string(key) + "'");
    }
  }
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  apply_config_text(ss.str(), cfg);
}

void validate(const RunConfig& cfg) {
  for (double d : cfg.grid) {
    if (!(d >= 0.0 && d <= 0.95)) throw UsageError("grid values must lie in [0, 0.95]");
  }
  if (cfg.tol && !(*cfg.tol > 0.0)) throw UsageError("tol must be positive");
  if (cfg.mc_samples < 10'000) throw UsageError("mc_samples must be at least 10000");
}

}  // namespace hyperverify::cli
