#ifndef KMBOARD_CLI_HPP_
#define KMBOARD_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace kmboard::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerify = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmboard::cli

#endif  // KMBOARD_CLI_HPP_
