#ifndef ORTHOGEN_TOOLS_CLI_HPP
#define ORTHOGEN_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace orthogen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRejected = 2;

// args excludes the program name. Results go to out, structured errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orthogen::cli

#endif
