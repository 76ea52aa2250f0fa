#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meshperm/capacity.hpp"
#include "meshperm/catalog.hpp"
#include "meshperm/permutation.hpp"

namespace meshperm {

enum class SymmetryKind { complement, reverse };

enum class SwapMap { complement, reverse, s9, s11, s13_s15, s17, s21 };

// "complement", "reverse", "S9", "S11", "S13_S15", "S17", "S21".
std::string_view to_string(SwapMap m);
// Also accepts "S13" and "S15". Throws InvalidInput otherwise.
SwapMap parse_swap_map(std::string_view text);

// The map the pair is proven with, if it has one.
std::optional<SwapMap> default_map_for(const PatternPair& pair);

Permutation apply_symmetry_map(const Permutation& pi, SymmetryKind kind);

// 123 prefix <-> 321 prefix.
Permutation map_S9(const Permutation& pi);
// 12...n <-> n2...1: exchanges the entries at positions 1 and n.
Permutation map_S11(const Permutation& pi);
// 1...n <-> n...1: exchanges the entries at positions 1 and n.
Permutation map_S13_S15(const Permutation& pi);

// Exchanges the first entry with the entry at the common third position
// of every occurrence. Throws InternalError if the occurrences do not
// share first position 1 and one third position, or if pi contains both
// patterns.
Permutation map_S17(const Permutation& pi, const PatternPair& pair);

struct IteratedSwap {
  Permutation result;
  int swaps = 0;
};

// While pi contains q2, exchanges the first and third entries of its
// occurrence with the least position triple. Throws DomainError if pi
// contains q1 and InternalError if more than C(n,3) swaps are needed.
IteratedSwap map_S21(const Permutation& pi, const PatternPair& pair);

struct BijectionReport {
  std::string map;
  std::string pair;
  int n = 0;
  bool pass = false;
  std::optional<std::string> counterexample;
  // Ordered so that serialized reports are stable.
  std::vector<std::pair<std::string, std::int64_t>> stats;
};

// For the occurrence-swapping maps: over all of S_n, the map is an
// injective involution and exchanges the two occurrence counts. For S21:
// on S_n(q1) the map is injective, lands in S_n(q2) within C(n,3) swaps,
// and |S_n(q1)| = |S_n(q2)|.
BijectionReport verify_swap_bijection(SwapMap map, int n, const PatternPair& pair,
                                      int limit = default_capacity());

}  // namespace meshperm
