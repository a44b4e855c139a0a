#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subsmooth::cli {

/// Exit codes of `subsmooth certify`; other commands use kOk / kError.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kInconclusive = 2;

/// Runs `subsmooth <args...>` (args exclude the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subsmooth::cli
