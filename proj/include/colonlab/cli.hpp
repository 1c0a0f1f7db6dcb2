#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colonlab::cli {

// Exit codes: 0 expected verdict, 1 verified failure verdict, 2 usage or
// precondition error, 3 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace colonlab::cli
