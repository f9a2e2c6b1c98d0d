#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superprim::cli {

/// Runs one invocation; args excludes the program name. Structured output
/// goes to out, error objects and help to err. Returns the exit code:
/// 0 success, 1 usage error, 2 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superprim::cli
