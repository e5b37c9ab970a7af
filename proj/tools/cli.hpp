#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitVerification = 3;

/// Runs the command line `args` (without the program name). JSON goes to
/// `out`, diagnostics to `err`; vectors not given with --input are read from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace mdft::cli
