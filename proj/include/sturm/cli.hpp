#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sturm::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2 };

/// Runs one command; `args` excludes the program name. Pure apart from the
/// files named by -o / --file / --complex and the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace sturm::cli
