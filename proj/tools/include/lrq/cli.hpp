#pragma once

#include <string>
#include <vector>

namespace lrq::cli {

/// Parses the command line and runs the selected subcommand.
/// Exit codes: 0 success, 1 numerical failure, 2 usage error.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

/// Build identifier printed by --version.
std::string version_string();

}  // namespace lrq::cli
