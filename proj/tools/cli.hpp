#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpa::cli {

/// Runs one command; `args` excludes the program name. Returns the exit status:
/// 0 success, 2 parse/usage error, 3 precondition violation, 4 internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpa::cli
