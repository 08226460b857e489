#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gsc::cli {

/// Runs one subcommand. Analysis output is a single JSON document on `out`;
/// diagnostics go to `err`. Returns 0 on success, 1 on domain errors, 2 on usage errors
/// and malformed input files.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsc::cli
