#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthoschmidt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. JSON results go to
/// `out`; domain errors print {"error", "message"} to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace orthoschmidt::cli
