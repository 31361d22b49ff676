#include "hyperverify_cli/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "hyperverify/appell.hpp"
#include "hyperverify/errors.hpp"
#include "hyperverify/hypergeometric.hpp"
#include "hyperverify/special_core.hpp"
#include "hyperverify/transforms.hpp"

namespace hyperverify::cli {

namespace {

struct EvalFn {
  std::size_t arity;
  std::function<EvalResult(const std::vector<double>&)> fn;
};

const std::map<std::string, EvalFn, std::less<>>& eval_table() {
  using V = std::vector<double>;
  static const std::map<std::string, EvalFn, std::less<>> t{
      {"gauss_2f1", {4, [](const V& p) { return gauss_2f1(p[0], p[1], p[2], p[3]); }}},
      {"gauss_sum", {3, [](const V& p) { return gauss_sum(p[0], p[1], p[2]); }}},
      {"pfq3", {5, [](const V& p) { return pfq_at_1({{p[0], p[1], p[2]}, {p[3], p[4]}}); }}},
      {"pfq4", {7, [](const V& p) { return pfq_at_1({{p[0], p[1], p[2], p[3]}, {p[4], p[5], p[6]}}); }}},
      {"f1_series", {6, [](const V& p) { return f1_series({p[0], p[1], p[2], p[3], p[4], p[5]}); }}},
      {"f1_integral", {6, [](const V& p) { return f1_integral({p[0], p[1], p[2], p[3], p[4], p[5]}); }}},
      {"kernel_a1", {3, [](const V& p) { return kernel_a1(p[0], p[1], p[2]); }}},
      {"rhs_main", {1, [](const V& p) { return rhs_main(p[0]); }}},
      {"lhs_main", {1, [](const V& p) { return lhs_main(p[0]); }}},
      {"ln_gamma", {1, [](const V& p) {
         const SignedLog g = ln_gamma_signed(p[0]);
         return EvalResult{g.log_magnitude, 0.0, 0, true};
       }}},
      {"pochhammer", {2, [](const V& p) {
         if (p[1] < 0 || p[1] != static_cast<double>(static_cast<std::size_t>(p[1]))) {
           throw InvalidParams("pochhammer index must be a non-negative integer");
         }
         return EvalResult{pochhammer(p[0], static_cast<std::size_t>(p[1])), 0.0, 0, true};
       }}},
      {"closed_a6", {3, [](const V& p) { return closed_a6(p[0], p[1], p[2]); }}},
      {"closed_a7", {4, [](const V& p) { return closed_a7(p[0], p[1], p[2], p[3]); }}},
      {"brychkov_a3", {7, [](const V& p) { return brychkov_a3(p[0], p[1], p[2], p[3], p[4], p[5], p[6]); }}},
  };
  return t;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int cmd_eval(const std::string& name, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto& t = eval_table();
  auto it = t.find(name);
  if (it == t.end()) {
    err << "unknown function '" << name << "'\n";
    return 2;
  }
  if (args.size() != it->second.arity) {
    err << name << " takes " << it->second.arity << " arguments, got " << args.size() << "\n";
    return 2;
  }
  std::vector<double> p;
  for (const std::string& a : args) {
    char* end = nullptr;
    const double v = std::strtod(a.c_str(), &end);
    if (end == a.c_str() || *end != '\0') {
      err << "not a number: '" << a << "'\n";
      return 2;
    }
    p.push_back(v);
  }
  try {
    const EvalResult r = it->second.fn(p);
    out << fmt17(r.value) << ' ' << fmt17(r.abs_error) << '\n';
    return 0;
  } catch (const Error& e) {
    err << name << ": " << e.what() << '\n';
    return 1;
  }
}

// Writes to the configured path, or to `out`. Unwritable paths are usage errors.
void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (!cfg.output_path) {
    out << text;
    return;
  }
  std::ofstream f(*cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write " + *cfg.output_path);
  f << text;
  if (!f) throw UsageError("write failed for " + *cfg.output_path);
}

CheckConfig check_config(const RunConfig& cfg) {
  CheckConfig c = default_check_config();
  c.mc.samples = cfg.mc_samples;
  c.mc.seed = cfg.seed;
  return c;
}

bool is_failure(Verdict v) { return v == Verdict::fail || v == Verdict::divergent; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of a hypergeometric integral identity and its intermediate steps"};
  app.require_subcommand(1);

  std::string config_path;
  std::string grid_text, format_text, out_path;
  double tol = 0.0, d = 0.0;
  std::uint64_t seed = 0, mc_samples = 0;
  bool slow = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value config file (default: $HYPERVERIFY_CONFIG)");
    sub->add_option("--tol", tol, "relative tolerance for every check");
    sub->add_option("--seed", seed, "Monte Carlo seed");
    sub->add_option("--mc-samples", mc_samples, "Monte Carlo samples per check");
    sub->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "write the report here instead of stdout");
  };

  std::string verify_id;
  CLI::App* verify = app.add_subcommand("verify", "check one identity at one d");
  verify->add_option("id", verify_id, "identity id")->required();
  verify->add_option("--d", d, "value of d")->required();
  add_common(verify);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "check every fast identity over a grid of d");
  sweep_cmd->add_option("--grid", grid_text, "comma separated d values");
  sweep_cmd->add_flag("--slow", slow, "include the Monte Carlo checks");
  add_common(sweep_cmd);

  std::string fn_name;
  std::vector<std::string> fn_args;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one library function");
  eval->add_option("function", fn_name, "function name")->required();
  eval->add_option("params", fn_args, "numeric parameters");
  eval->positionals_at_end();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  if (eval->parsed()) return cmd_eval(fn_name, fn_args, out, err);

  CLI::App* sub = verify->parsed() ? verify : sweep_cmd;
  RunConfig cfg;
  try {
    if (sub->count("--config") > 0) {
      apply_config_file(config_path, cfg);
    } else if (const char* env = std::getenv("HYPERVERIFY_CONFIG"); env != nullptr && *env != '\0') {
      apply_config_file(env, cfg);
    }
    if (sub->count("--tol") > 0) cfg.tol = tol;
    if (sub->count("--seed") > 0) cfg.seed = seed;
    if (sub->count("--mc-samples") > 0) cfg.mc_samples = mc_samples;
    if (sub->count("--format") > 0) cfg.output_format = format_text == "json" ? OutputFormat::json : OutputFormat::csv;
    if (sub->count("--out") > 0) cfg.output_path = out_path;
    if (sub == sweep_cmd) {
      if (sweep_cmd->count("--grid") > 0) cfg.grid = parse_grid(grid_text);
      if (slow) cfg.slow_checks = true;
    }
    validate(cfg);

    std::vector<CheckReport> reports;
    if (sub == verify) {
      try {
        reports.push_back(check(verify_id, d, cfg.tol, check_config(cfg)));
      } catch (const UnknownIdentity& e) {
        throw UsageError(e.what());
      }
    } else {
      SweepOptions opts;
      opts.include_slow = cfg.slow_checks;
      opts.config = check_config(cfg);
      reports = sweep(cfg.grid, cfg.tol, opts);
    }
    emit(format_reports(reports, cfg.output_format), cfg, out);
    if (sub == verify && !reports.front().note.empty()) err << "note: " << reports.front().note << '\n';
    for (const CheckReport& r : reports) {
      if (is_failure(r.verdict)) return 1;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hyperverify::cli
