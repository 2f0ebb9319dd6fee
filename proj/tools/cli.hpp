#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jordan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Returns 0, 1 or 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jordan::cli
