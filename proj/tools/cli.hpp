#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qcr::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kDomainError = 3;

// Runs one `qcr` invocation. args excludes the program name. Human-readable
// output goes to `out`, diagnostics and usage text to `err`.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace qcr::cli
