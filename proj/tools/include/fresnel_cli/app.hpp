#pragma once

#include <iosfwd>

namespace fresnel::cli {

enum ExitCode : int {
  kOk = 0,
  kSuiteFailed = 1,
  kBadArguments = 2,
  kNumericalError = 3,
};

/// One invocation of the `fresnel` tool. CSV and reports go to `out` unless
/// --output names a file; relative output paths are resolved against
/// $FRESNEL_OUTPUT_DIR when it is set.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fresnel::cli
