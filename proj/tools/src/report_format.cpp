#include <cmath>
#include <cstdio>

#include "json.hpp"

#include "hyperverify_cli/cli.hpp"

namespace hyperverify::cli {

namespace {

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json jnum(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

}  // namespace

std::string format_csv(const std::vector<CheckReport>& reports) {
  std::string s(kCsvHeader);
  s += '\n';
  for (const CheckReport& r : reports) {
    s += r.id;
    for (double x : {r.d, r.lhs_value, r.lhs_err, r.rhs_value, r.rhs_err, r.abs_diff, r.rel_diff, r.tol}) {
      s += ',';
      s += num(x);
    }
    s += ',';
    s += to_string(r.verdict);
    s += '\n';
  }
  return s;
}

std::string format_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckReport& r : reports) {
    arr.push_back({{"id", r.id},
                   {"d", jnum(r.d)},
                   {"lhs", jnum(r.lhs_value)},
                   {"lhs_err", jnum(r.lhs_err)},
                   {"rhs", jnum(r.rhs_value)},
                   {"rhs_err", jnum(r.rhs_err)},
                   {"abs_diff", jnum(r.abs_diff)},
                   {"rel_diff", jnum(r.rel_diff)},
                   {"tol", jnum(r.tol)},
                   {"verdict", std::string(to_string(r.verdict))}});
  }
  return arr.dump(2) + "\n";
}

std::string format_reports(const std::vector<CheckReport>& reports, OutputFormat f) {
  return f == OutputFormat::json ? format_json(reports) : format_csv(reports);
}

}  // namespace hyperverify::cli
