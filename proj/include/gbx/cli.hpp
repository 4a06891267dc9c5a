#ifndef GBX_CLI_HPP
#define GBX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gbx::cli {

// Runs one subcommand; `args` excludes the program name. Writes exactly one
// JSON report to `out` (or the --out file). Returns 0 on success, 1 on a
// refused certificate, 2 on parse or guard errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbx::cli

#endif
