#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vcrit::cli {

/// args[0] is the program name. Returns the process exit code:
/// 0 success, 1 domain failure, 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vcrit::cli
