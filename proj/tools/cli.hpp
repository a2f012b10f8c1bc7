#pragma once

#include <iosfwd>

namespace metric_ripple::cli {

/// Entry point of the metric-ripple command. Returns the process exit code:
/// 0 success, 1 usage or validation error, 2 non-convergence or failed oracle.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace metric_ripple::cli
