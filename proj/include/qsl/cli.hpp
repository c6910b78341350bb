#pragma once

#include <ostream>

namespace qsl {

// Full command-line front end. Exit codes: 0 success, 1 verification found
// bound violations, 2 usage/parse/domain errors, 3 file errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsl
