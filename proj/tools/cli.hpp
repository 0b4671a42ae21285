#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace numera::cli {

/// Runs one invocation (argv without the program name). Results go to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 1 usage error, 2 domain
/// error or not representable, 3 invalid system definition.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace numera::cli
