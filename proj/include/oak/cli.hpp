#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oak::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitMalformed = 2;

/// Runs one `oak` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace oak::cli
