#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace lincomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitModelFile = 2;
inline constexpr int kExitAnalysis = 3;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit status: 0 on success
/// (whatever the verdict), 1 on usage errors, 2 on unreadable or invalid
/// model files, 3 when an analysis precondition or cap is violated.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lincomp::cli
