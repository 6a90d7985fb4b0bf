#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfib {

/**
 * Runs one qfib subcommand. `args` excludes the program name.
 * Returns 0 on success, 1 when a verification or series check fails,
 * 2 on a usage error (the message goes to `err`).
 */
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfib
