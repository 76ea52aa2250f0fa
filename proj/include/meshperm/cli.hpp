#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace meshperm::cli {

enum class Format { text, json, csv };

struct RunConfig {
  int n_max = 7;
  // Empty means every pair.
  std::vector<std::string> pairs;
  Format format = Format::text;
  std::string out_path;
  int workers = 1;
  bool strict = false;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line. Never throws; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meshperm::cli
