#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modk {

/// Command dispatch behind the modk binary, parameterized over streams so
/// tests can drive it in-process. Exit codes: 0 success, 1 definite
/// negative result, 2 input error, 3 budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modk
