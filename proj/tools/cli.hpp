#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fanocli {

/// Runs the `fano` command line (args exclude the program name). JSON goes
/// to `out`, diagnostics to `err`.
///
/// Exit codes: 0 success, 1 an `--expect` mismatch or failed internal
/// cross-check, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fanocli
