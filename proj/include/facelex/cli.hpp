#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace facelex::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,       // not a face / certificate rejected
  kUsage = 2,          // bad arguments, malformed input, invalid cortege
  kCrossCheck = 3,     // main path and oracle disagree
};

/// Runs one command line (args excludes the program name). The JSON result
/// goes to `out` (or the --out file), diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace facelex::cli
