#ifndef NILFILT_CLI_HPP
#define NILFILT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nilfilt::cli {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 input or usage error.
constexpr int kPass = 0, kFail = 1, kUsage = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilfilt::cli

#endif
