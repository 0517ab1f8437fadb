#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace unitfrac::cli {

enum class OutputFormat { Json, Csv, Plain };

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitInconclusive = 4;
inline constexpr int kExitVerification = 5;

inline constexpr std::size_t kDefaultDigitGuard = 10'000;

struct CliConfig {
  std::string command;
  std::string suite;  ///< verify only
  std::string p = "1";
  std::string q = "1";
  std::size_t m = 1;
  std::string N = "1";
  std::int64_t k = 4;
  std::optional<std::int64_t> q_max;
  std::optional<std::int64_t> j_max;
  std::optional<std::int64_t> s_max;
  std::optional<std::int64_t> k_max;
  std::uint64_t budget = 0;
  std::size_t grid = 90;
  std::optional<std::size_t> digit_guard = kDefaultDigitGuard;
  OutputFormat output_format = OutputFormat::Json;
  unsigned jobs = 1;
};

/// Parses `args` (without the program name), runs the command, writes results
/// to `out` and diagnostics to `err`, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitfrac::cli
