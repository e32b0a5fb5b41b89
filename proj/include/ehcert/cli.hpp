#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ehcert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInvalid = 3;
inline constexpr int kExitInternal = 4;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ehcert::cli
