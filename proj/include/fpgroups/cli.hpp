#ifndef FPGROUPS_CLI_HPP
#define FPGROUPS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fpg {

// Exit codes: 0 verified/completed, 1 usage error, 2 verification
// failure, 3 resource limit exceeded.
int run_cli(std::vector<std::string> const& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace fpg

#endif
