#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hnfold::cli {

/// Exit codes. `kConjectureFails` and `kProvedBoundFails` come only from
/// hnc-check; the latter means a proved theorem was violated, i.e. a bug.
inline constexpr int kOk = 0;
inline constexpr int kConjectureFails = 1;
inline constexpr int kInputError = 2;
inline constexpr int kProvedBoundFails = 3;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hnfold::cli
