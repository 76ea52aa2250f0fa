#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meshperm/catalog.hpp"
#include "meshperm/dist.hpp"

namespace meshperm {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
  // Non-fatal lines are reported but do not affect CheckReport::pass.
  bool fatal = true;
};

struct CheckReport {
  std::vector<CheckLine> lines;
  bool pass() const;
  void add(CheckLine line) { lines.push_back(std::move(line)); }
};

// Brute-force joint tables keyed by (pair id, n), computed on first use.
class TableCache {
 public:
  TableCache(const std::vector<PatternPair>& catalog, DistributionOptions options);

  const JointTable& get(std::string_view id, int n);
  const PatternPair& pair(std::string_view id) const { return find_pair(*catalog_, id); }
  const std::vector<PatternPair>& catalog() const { return *catalog_; }
  int limit() const { return options_.limit; }

 private:
  const std::vector<PatternPair>* catalog_;
  DistributionOptions options_;
  std::map<std::pair<std::string, int>, JointTable> tables_;
};

struct VerifyOptions {
  int n_max = 7;
  // Empty selects every pair.
  std::vector<std::string> pairs;
  bool strict = false;
};

// Per pair: joint symmetry for 2 <= n <= n_max (conjectured pairs are
// fatal only when strict), plus the never-both check for S9..S18. Per
// frame: identical tables among the selected members.
CheckReport run_verify(TableCache& cache, const VerifyOptions& options);

CheckLine check_thm21(TableCache& cache, int n_max, int split_n_max);
CheckLine check_lemma31(int n_max, int limit);
CheckLine check_thm32(TableCache& cache, int n_max);
CheckLine check_thm32_convolution(int n_max);
CheckLine check_harmonic(int n_max);
CheckLine check_thm33(TableCache& cache, int n_max, int split_n_max);
CheckLine check_thm34(TableCache& cache, int n_max);
CheckLine check_thm34_coefficients(int n_max);
CheckLine check_cor35(TableCache& cache, int n_max);
CheckLine check_thm36(int n_max, int limit);
CheckLine check_chu_vandermonde(int n_max);

// Every formula against its oracle up to n_max.
CheckReport run_crosscheck(TableCache& cache, int n_max);

}  // namespace meshperm
