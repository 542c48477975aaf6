#pragma once

#include <ostream>

namespace pfsum::cli {

enum ExitCode : int {
  kAllPass = 0,
  kFailure = 1,
  kBadInput = 2,
  kNonConvergent = 3,
};

/// Entry point of `pfsum verify|compute|table|probe`. Reports go to `out`
/// (or --output), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pfsum::cli
