#pragma once

#include <string>
#include <vector>

namespace ramiflow::cli {

// Entry point behind the ramiflow binary; args excludes the program name.
// Returns the process exit code: 0 on success, 2 when an input fails
// validation (the message names the violated invariant), 1 when an internal
// consistency check trips.
int run(std::vector<std::string> args);

}  // namespace ramiflow::cli
