#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace radii::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitCapability = 4;

/// 64-bit FNV-1a.
uint64_t fnv1a64(std::string_view bytes);

/// Runs the command line `args` (without the program name). The report goes
/// to `out`, diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radii::cli
