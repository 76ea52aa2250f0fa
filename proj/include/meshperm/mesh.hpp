#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meshperm/permutation.hpp"

namespace meshperm {

// Box (col, row) of the (m+1)x(m+1) grid drawn around a length-m pattern.
// Coordinates are 0-based: column i lies between the i-th and (i+1)-th
// pattern points (sentinels at 0 and m+1), likewise for rows.
struct Box {
  int col = 0;
  int row = 0;
  auto operator<=>(const Box&) const = default;
};

class MeshPattern {
 public:
  MeshPattern() = default;

  // Duplicate boxes are dropped. Throws InvalidInput if a box lies outside
  // [0,m]x[0,m] or tau is empty.
  MeshPattern(Permutation tau, std::vector<Box> shading);

  // Parses "<tau>|<i,j;i,j;...>", e.g. "123|0,0;1,2;2,1;3,1" or "123|".
  // Duplicate boxes are dropped silently; see parse_pattern_text to observe
  // them.
  static MeshPattern parse(std::string_view text);
  std::string to_string() const;

  const Permutation& tau() const { return tau_; }
  int length() const { return tau_.size(); }
  // Sorted by (col, row), no duplicates.
  std::span<const Box> shading() const { return shading_; }
  bool is_shaded(Box b) const;

  bool operator==(const MeshPattern&) const = default;

 private:
  Permutation tau_;
  std::vector<Box> shading_;
};

struct ParsedPattern {
  MeshPattern pattern;
  int duplicate_boxes = 0;
};

// Throws ParseError on malformed text.
ParsedPattern parse_pattern_text(std::string_view text);

MeshPattern complement_pattern(const MeshPattern& p);
MeshPattern reverse_pattern(const MeshPattern& p);
MeshPattern inverse_pattern(const MeshPattern& p);

struct ShadingClass {
  bool symmetric = false;
  // Exactly one of (i,j), (j,i) shaded for every i != j; the diagonal is
  // unconstrained.
  bool minus_antipodal = false;
};

ShadingClass classify_shading(const MeshPattern& p);

// Reference implementation of the occurrence test. positions are 1-based
// and strictly increasing; throws InvalidInput otherwise. Scans every shaded
// region entry by entry.
bool is_occurrence(const Permutation& pi, std::span<const int> positions,
                   const MeshPattern& pat);

// Counts of entries of one permutation inside open axis-aligned rectangles,
// answered in O(1) from a 2D prefix-sum table.
class DominanceTable {
 public:
  explicit DominanceTable(const Permutation& pi);

  // Number of entries at positions strictly between pos_lo and pos_hi with
  // values strictly between val_lo and val_hi. Bounds may be the sentinels
  // 0 and n+1.
  int count_open(int pos_lo, int pos_hi, int val_lo, int val_hi) const;

  const Permutation& permutation() const { return *pi_; }

 private:
  int prefix(int pos, int val) const { return prefix_[pos * stride_ + val]; }

  const Permutation* pi_;
  int stride_;
  std::vector<int> prefix_;
};

// Exact number of occurrences of pat in pi (0 if pat is longer than pi).
std::int64_t count_occurrences(const Permutation& pi, const MeshPattern& pat);
std::int64_t count_occurrences(const DominanceTable& table, const MeshPattern& pat);

// Same count via is_occurrence over every position tuple.
std::int64_t count_occurrences_naive(const Permutation& pi, const MeshPattern& pat);

// Every occurrence as a tuple of 1-based positions, in lexicographic order
// of the position tuples.
std::vector<std::vector<int>> occurrences(const Permutation& pi, const MeshPattern& pat);

std::pair<std::int64_t, std::int64_t> joint_counts(const Permutation& pi,
                                                   const MeshPattern& q1,
                                                   const MeshPattern& q2);

}  // namespace meshperm
