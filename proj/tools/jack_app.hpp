#pragma once

#include <iosfwd>

namespace jackpoly {

// Full command-line front end. Returns the process exit code:
// 0 success / all identities hold, 1 failed identities or data errors,
// 2 usage errors.
int run_jack_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jackpoly
