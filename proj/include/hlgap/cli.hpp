#ifndef HLGAP_CLI_HPP
#define HLGAP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hlgap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitIoError = 2;

/// Runs one hlgap command. args excludes the program name. Returns 0 on
/// success, 1 on a domain error, 2 on bad usage, unreadable input or
/// malformed files.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hlgap

#endif  // HLGAP_CLI_HPP
