#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rubin::cli {

/// Runs one command line (without the program name). The JSON report goes
/// to `out` (or to --output), diagnostics to `err`. Exit status: 0 verdict
/// true or witness constructed, 1 verdict false or bounded search negative,
/// 2 input or hypothesis error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rubin::cli
