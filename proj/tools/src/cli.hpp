#pragma once

#include <iosfwd>

namespace fuzzy::cli {

// Exit codes: 0 success, 1 failed verifier verdict, 2 usage error, 3 runtime error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fuzzy::cli
