#ifndef ORTK_CLI_HPP
#define ORTK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ortk {

// `args` excludes the program name. Returns 0 on success, 1 when a
// verification fails and 2 on usage or parse errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ortk

#endif
