#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpa::cli {

/// Dispatches one command line (without the program name). Exit codes:
/// 0 success (including bounded not-found results), 1 domain errors,
/// 2 usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpa::cli
