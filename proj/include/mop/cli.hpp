#ifndef MOP_CLI_HPP_
#define MOP_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace mop {

// Entry point of the mopbench tool. `args` excludes the program name.
// Returns the process exit code: 0 iff the command succeeded and, for verify
// and scan, every record passed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mop

#endif  // MOP_CLI_HPP_
