#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace treewalk::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_resource = 3;

/// Thrown for unreadable or unwritable files; maps to exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Writes to a file, or to standard output for "-".
void write_output(const std::string& path, const std::string& content);

struct PaperCheck {
    std::string name;
    bool passed = false;
    std::string measured;
    std::string expected;
};

/// Runs every fixture-backed check; I/O problems become failed checks.
std::vector<PaperCheck> run_paper_checks(const std::filesystem::path& fixtures);

} // namespace treewalk::cli
