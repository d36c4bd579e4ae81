#ifndef DYCK_CLI_HPP
#define DYCK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "dyck/verify.hpp"

namespace dyck::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Runs one command line. `args` excludes the program name. Returns 0 on
// success, 1 on a domain error and 2 on a usage error; diagnostics go to err.
// `methods` backs the verify subcommand.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const CountingMethods& methods = default_methods());

}  // namespace dyck::cli

#endif  // DYCK_CLI_HPP
