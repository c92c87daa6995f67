#pragma once

#include "cfn_cli/report.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace cfn::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

using Command = std::function<Report(const Params&)>;

/// Known subcommands, in help order.
const std::vector<std::pair<std::string, Command>>& commands();

/// argv without the program name. Writes the report to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfn::cli
