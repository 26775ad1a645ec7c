#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace a1 {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitIoError = 3;

/// Runs the `compare`, `plot` or `rank` subcommand. `args` excludes the
/// program name. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace a1
