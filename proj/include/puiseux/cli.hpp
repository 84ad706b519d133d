#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace puiseux::cli {

enum class Format { Text, Json };

struct CliConfig {
  unsigned depth = 8;
  std::uint64_t max_prime = 100;
  Format format = Format::Text;
  std::uint64_t seed = 0;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics "error[E_CODE] message" to `err`. PUISEUX_FORMAT, when set to
/// "text" or "json", changes the default output format.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace puiseux::cli
