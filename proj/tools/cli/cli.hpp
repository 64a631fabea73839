#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace orbq::cli {

inline constexpr std::uint64_t kDefaultSeed = 7;
inline constexpr std::size_t kDefaultTrials = 50;

struct RunConfig {
  std::string command;
  std::string config_path;
  std::string symbol_path;
  std::string connection_path;
  std::string out_path;
  std::optional<unsigned> degree;
  std::optional<std::size_t> q;
  std::string suite = "all";
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
};

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kSchema = 2, kValidation = 3 };

// Runs one command. The report goes to config.out_path (or `out`); errors are
// written to `err` as a JSON body and mapped to the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and runs. Usage errors exit 2.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbq::cli
