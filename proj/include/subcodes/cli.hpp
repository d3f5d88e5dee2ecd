#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace subcodes {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_usage = 2 };

/// Runs the command line (without the program name). Exit codes: 0 success,
/// 1 verification failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);
std::string sha256_hex(const std::string& bytes);
/// Writes via a sibling temporary file and a rename.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace subcodes
