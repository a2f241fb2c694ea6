#pragma once

#include <iosfwd>

namespace smaa::cli {

/// Exit codes: 0 success, 1 invalid input (parse/validation/usage), 2 runtime failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace smaa::cli
