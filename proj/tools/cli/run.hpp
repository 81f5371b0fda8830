#ifndef TCL_CLI_RUN_HPP
#define TCL_CLI_RUN_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tcl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

// args excludes the program name. The report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcl::cli

#endif  // TCL_CLI_RUN_HPP
