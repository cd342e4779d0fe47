// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casson3::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Worker count: CASSON3_THREADS if set to a positive integer, otherwise
/// the hardware concurrency.
unsigned thread_count();

/// Parses "a..b" into an inclusive range; throws std::invalid_argument.
std::pair<long long, long long> parse_range(const std::string &text);

} // namespace casson3::cli
