#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclenc::cli {

enum ExitCode { kOk = 0, kFail = 1, kUsage = 2, kInternal = 3 };

// Entry point shared by the binary and the tests; args exclude argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclenc::cli
