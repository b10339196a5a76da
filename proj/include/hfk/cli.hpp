#pragma once

#include <iosfwd>

namespace hfk {

// Entry point shared by the `hfk` executable and the tests. Returns the exit
// code: 0 success or PASS, 1 computational failure or FAIL, 2 bad input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hfk
