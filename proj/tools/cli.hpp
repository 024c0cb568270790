#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gminor::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kInapplicable = 3,
  kCapacity = 4,
};

inline constexpr int kSchemaVersion = 1;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`; `in` backs `--input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a of `bytes` as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace gminor::cli
