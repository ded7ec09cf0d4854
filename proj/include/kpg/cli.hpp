#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace kpg::cli {

/// Process exit statuses.
enum Exit : int {
  kOk = 0,
  kResidualNonzero = 1,
  kUsage = 2,  // also malformed graph6 / JSON input
  kSizeCap = 3,
  kDomain = 4,
};

/// Runs one subcommand. `args` excludes the program name. Output goes to
/// `out`, diagnostics and warnings to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kpg::cli
