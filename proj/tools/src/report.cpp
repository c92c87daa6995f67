#include "cfn_cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace cfn::cli {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Check& Report::check(std::string name, bool pass, Json observed, Json expected, std::optional<double> tolerance) {
  checks.push_back({std::move(name), pass, std::move(observed), std::move(expected), tolerance});
  return checks.back();
}

Json to_json(const Report& r) {
  Json j;
  j["schema"] = 1;
  j["command"] = r.command;
  j["config"] = r.config;
  j["results"] = r.results;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["observed"] = c.observed;
    cj["expected"] = c.expected;
    cj["tolerance"] = c.tolerance ? Json(*c.tolerance) : Json(nullptr);
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

namespace {

std::string cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void write_row(std::ostringstream& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell(row[i]);
  out << "\n";
}

}  // namespace

std::string to_csv(const Report& r) {
  std::ostringstream out;
  if (!r.csv_header.empty()) {
    write_row(out, r.csv_header);
    for (const auto& row : r.csv_rows) write_row(out, row);
    return out.str();
  }
  write_row(out, {"name", "pass", "observed", "expected", "tolerance"});
  for (const auto& c : r.checks) {
    write_row(out, {c.name, c.pass ? "true" : "false", scalar(c.observed), scalar(c.expected),
                    c.tolerance ? Json(*c.tolerance).dump() : ""});
  }
  return out.str();
}

}  // namespace cfn::cli
