#pragma once

#include "cfn_cli/config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cfn::cli {

struct Check {
  std::string name;
  bool pass = false;
  Json observed;
  Json expected;
  std::optional<double> tolerance;
};

struct Report {
  std::string command;
  Json config = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;
  double runtime_ms = 0;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  bool all_pass() const;
  Check& check(std::string name, bool pass, Json observed, Json expected, std::optional<double> tolerance = {});
};

Json to_json(const Report& r);
/// The command's table, or the check list when the command has none.
std::string to_csv(const Report& r);

}  // namespace cfn::cli
