#pragma once

// Command-line frontend. Exit codes: 0 success, 1 validation failure,
// 2 I/O or parse failure, 3 internal inconsistency.

#include <ostream>
#include <string>
#include <vector>

namespace cyclo::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// argv[0] is supplied internally.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclo::cli
