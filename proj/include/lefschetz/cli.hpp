#pragma once

#include <iosfwd>

namespace lefschetz::cli {

/// Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lefschetz::cli
