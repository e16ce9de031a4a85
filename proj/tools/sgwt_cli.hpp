#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgwt::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kData = 2;
inline constexpr int kNumerical = 3;

/// Runs the `sgwt` command line. `args` excludes the program name.
/// Diagnostics go to `err`, tables printed to stdout go to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgwt::cli
