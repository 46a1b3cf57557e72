#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seidel::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, mismatch = 3 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seidel::cli
