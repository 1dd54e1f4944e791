#ifndef PERMFOREST_CLI_HPP
#define PERMFOREST_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace permforest {

// Dispatches one CLI invocation. args excludes the program name. Exit codes:
// 0 success, 1 domain error, 2 verification failure or internal
// inconsistency, 64 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permforest

#endif
