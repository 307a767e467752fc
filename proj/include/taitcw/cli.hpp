#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taitcw {

/// Runs one command line. Returns 0 on success, 1 on a domain error (printed
/// to `err` as `<Kind>: <message>`) and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taitcw
