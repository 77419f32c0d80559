#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilherm {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Exit codes of run_command.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs one subcommand; `args` excludes the program name. Human-readable output goes to `out`,
/// diagnostics to `err`, and the JSON report to the file named by `--json` (`-` for `out`).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of the bytes of `text`.
std::string sha256_hex(const std::string& text);

}  // namespace nilherm
