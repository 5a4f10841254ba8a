#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wcc {

// Runs one command-line invocation (args excludes the program name).
// Exit codes: 0 success / all verifications pass, 1 verification failure,
// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wcc
