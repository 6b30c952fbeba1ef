#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace prmqc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitConstruction = 4;

/// Step budget used when --budget is absent: PRMQC_BUDGET if set, else 1e8.
std::uint64_t default_budget();

/// Parses a budget such as "100000" or "1e8".
std::uint64_t parse_budget(const std::string& text);

/// Runs the command line (args excludes the program name) and returns the
/// process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prmqc
