#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topocorr {

/// The command-line surface: parses the arguments (subcommand plus flags),
/// runs the computation, and writes one structured JSON document to --output
/// (stdout by default). Returns the process exit status: 0 on success,
/// nonzero with a diagnostic on the error stream otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace topocorr
