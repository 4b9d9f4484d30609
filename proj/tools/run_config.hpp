#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cnf::cli {

enum class Format { Text, Json, Csv };
enum class Tier { Fast, Slow };

struct RunConfig {
  std::string command;
  std::int64_t p = 3;
  int n = 2;
  int n_max = 20;
  unsigned precision = 32;
  std::string cache;  // empty: $CNF_CACHE or the default file
  Format format = Format::Text;
  std::string out;    // empty: stdout (make-tables: output directory)
  Tier tier = Tier::Fast;
  std::string dump;
  std::string load;
  std::vector<std::int64_t> values;  // discriminants for classnum / period
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Runs one command; output goes to `out` unless cfg.out names a file.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace cnf::cli
