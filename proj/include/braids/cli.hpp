#ifndef BRAIDS_CLI_HPP
#define BRAIDS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace braids::cli {

/// Dispatches the subcommands nf, eq, theta, abel, eta, sbnf, sbeq, tracenf,
/// verify.  Returns 0 on success, 2 on parse/usage errors, 3 on verification
/// failure.  Output is JSON unless --plain is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braids::cli

#endif
