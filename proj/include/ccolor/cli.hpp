#ifndef CCOLOR_CLI_HPP
#define CCOLOR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ccolor {

// Full command-line front end, stream-parameterized for testing.
// args excludes the program name. Exit codes: 0 success, 1 invalid input
// or failed verification, 2 oracle size limit exceeded.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace ccolor

#endif
