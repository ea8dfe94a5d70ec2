#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crtkit::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;          // verification or comparison failure
inline constexpr int kExitParseError = 2;    // bad arguments, files, or documents
inline constexpr int kExitNotInvolution = 3;
inline constexpr int kExitInadmissible = 4;

// Dispatches one command line (without the program name). All output goes to
// the given streams; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace crtkit::cli
