#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace synk {

/// Entry point of the synkc driver. `args` includes the program name.
/// Exit codes: 0 success, 1 diagnostics or failed checks, 2 usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace synk
