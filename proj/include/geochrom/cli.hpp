#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geochrom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command. `args` excludes the program name. Primary output goes
/// to `out`; errors are written to `err` as one-line JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace geochrom::cli
