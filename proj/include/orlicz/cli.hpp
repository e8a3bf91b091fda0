#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orlicz::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs one orlicz_kit invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace orlicz::cli
