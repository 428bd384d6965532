#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcmut::cli {

// Runs one CLI invocation. Returns the process exit code: 0 on success, 1
// when input fails validation (the message names the violated invariant),
// 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcmut::cli
