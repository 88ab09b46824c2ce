#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace reglang::cli {

enum class Command { Entropy, Distance, Matrix, Analyze };

struct CliConfig {
  Command command = Command::Entropy;
  std::vector<std::string> regexes;
  std::string file;
  std::optional<std::string> alphabet;
  std::string metric = "jc";
  std::optional<std::size_t> n;
  std::optional<double> tol;
  std::string mode = "auto";
  /// Average J'_n instead of J_n for jc.
  bool prime = false;
  std::optional<std::size_t> counts;
  bool dump = false;
  bool verify = false;
  std::string format = "json";
  std::size_t threads = 0;  // 0 = hardware concurrency
  std::size_t max_states = 0;  // 0 = REGLANG_MAX_STATES or the default
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitConvergence = 2;

/// Parses argv with CLI11. Returns the exit code to use when parsing ends the
/// run (help, usage error), otherwise nullopt and fills `config`.
std::optional<int> parse(int argc, const char* const* argv, CliConfig& config, std::ostream& out,
                         std::ostream& err);

int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse + run.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace reglang::cli
