#include "meshperm/bijections.hpp"

#include <map>
#include <set>

#include "meshperm/closed_forms.hpp"
#include "meshperm/error.hpp"

namespace meshperm {

std::string_view to_string(SwapMap m) {
  switch (m) {
    case SwapMap::complement: return "complement";
    case SwapMap::reverse: return "reverse";
    case SwapMap::s9: return "S9";
    case SwapMap::s11: return "S11";
    case SwapMap::s13_s15: return "S13_S15";
    case SwapMap::s17: return "S17";
    case SwapMap::s21: return "S21";
  }
  return "";
}

SwapMap parse_swap_map(std::string_view text) {
  if (text == "complement") return SwapMap::complement;
  if (text == "reverse") return SwapMap::reverse;
  if (text == "S9") return SwapMap::s9;
  if (text == "S11") return SwapMap::s11;
  if (text == "S13" || text == "S15" || text == "S13_S15") return SwapMap::s13_s15;
  if (text == "S17") return SwapMap::s17;
  if (text == "S21") return SwapMap::s21;
  throw InvalidInput("unknown map '" + std::string(text) + "'");
}

std::optional<SwapMap> default_map_for(const PatternPair& pair) {
  if (pair.method == Method::complement_reverse) {
    if (complement_pattern(pair.q1) == pair.q2) return SwapMap::complement;
    if (reverse_pattern(pair.q1) == pair.q2) return SwapMap::reverse;
    return std::nullopt;
  }
  if (pair.id == "S9") return SwapMap::s9;
  if (pair.id == "S11") return SwapMap::s11;
  if (pair.id == "S13" || pair.id == "S15") return SwapMap::s13_s15;
  if (pair.id == "S17") return SwapMap::s17;
  if (pair.id == "S21") return SwapMap::s21;
  return std::nullopt;
}

Permutation apply_symmetry_map(const Permutation& pi, SymmetryKind kind) {
  return kind == SymmetryKind::complement ? complement(pi) : reverse(pi);
}

Permutation map_S9(const Permutation& pi) {
  if (pi.size() < 3) return pi;
  std::vector<int> v(pi.values().begin(), pi.values().end());
  if (v[0] == 1 && v[1] == 2 && v[2] == 3) {
    v[0] = 3;
    v[2] = 1;
  } else if (v[0] == 3 && v[1] == 2 && v[2] == 1) {
    v[0] = 1;
    v[2] = 3;
  } else {
    return pi;
  }
  return Permutation(std::move(v));
}

Permutation map_S11(const Permutation& pi) {
  const int n = pi.size();
  if (n < 3 || pi.at(2) != 2) return pi;
  const bool rising = pi.at(1) == 1 && pi.at(n) == n;
  const bool falling = pi.at(1) == n && pi.at(n) == 1;
  return rising || falling ? swap_positions(pi, 1, n) : pi;
}

Permutation map_S13_S15(const Permutation& pi) {
  const int n = pi.size();
  if (n < 2) return pi;
  const bool rising = pi.at(1) == 1 && pi.at(n) == n;
  const bool falling = pi.at(1) == n && pi.at(n) == 1;
  return rising || falling ? swap_positions(pi, 1, n) : pi;
}

namespace {

// Common third position of all occurrences, all starting at position 1.
int common_third_position(const Permutation& pi, const std::vector<std::vector<int>>& occ,
                          const char* which) {
  const int t = occ.front()[2];
  for (const auto& o : occ) {
    if (o[0] != 1 || o[2] != t) {
      throw InternalError(std::string("occurrences of ") + which + " in " + pi.to_string() +
                          " do not share first position 1 and one third position");
    }
  }
  return t;
}

}  // namespace

Permutation map_S17(const Permutation& pi, const PatternPair& pair) {
  const auto occ1 = occurrences(pi, pair.q1);
  const auto occ2 = occurrences(pi, pair.q2);
  if (!occ1.empty() && !occ2.empty()) {
    throw InternalError(pi.to_string() + " contains both patterns of " + pair.id);
  }
  if (!occ1.empty()) return swap_positions(pi, 1, common_third_position(pi, occ1, "q1"));
  if (!occ2.empty()) return swap_positions(pi, 1, common_third_position(pi, occ2, "q2"));
  return pi;
}

IteratedSwap map_S21(const Permutation& pi, const PatternPair& pair) {
  if (count_occurrences(pi, pair.q1) != 0) {
    throw DomainError(pi.to_string() + " contains q1 of " + pair.id);
  }
  const Count guard = binomial(pi.size(), 3);
  IteratedSwap out{pi, 0};
  std::string trace = pi.to_string();
  while (true) {
    const auto occ = occurrences(out.result, pair.q2);
    if (occ.empty()) return out;
    if (out.swaps >= guard) {
      throw InternalError("iterated swap on " + pi.to_string() + " exceeded " +
                          std::to_string(guard) + " steps: " + trace);
    }
    const auto& first = occ.front();
    out.result = swap_positions(out.result, first[0], first[2]);
    ++out.swaps;
    trace += " -> " + out.result.to_string();
  }
}

namespace {

Permutation apply_swap(SwapMap map, const Permutation& pi, const PatternPair& pair) {
  switch (map) {
    case SwapMap::complement: return complement(pi);
    case SwapMap::reverse: return reverse(pi);
    case SwapMap::s9: return map_S9(pi);
    case SwapMap::s11: return map_S11(pi);
    case SwapMap::s13_s15: return map_S13_S15(pi);
    case SwapMap::s17: return map_S17(pi, pair);
    case SwapMap::s21: break;
  }
  throw InternalError("apply_swap called with the iterated map");
}

std::string pair_text(std::pair<std::int64_t, std::int64_t> c) {
  return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

BijectionReport verify_occurrence_swap(SwapMap map, int n, const PatternPair& pair, int limit) {
  BijectionReport r{std::string(to_string(map)), pair.id, n, true, std::nullopt, {}};
  std::map<Permutation, Permutation> preimage;
  std::int64_t total = 0;
  std::int64_t fixed = 0;
  std::int64_t structured = 0;
  auto fail = [&](std::string why) {
    if (!r.counterexample) r.counterexample = std::move(why);
    r.pass = false;
  };
  for (const Permutation& pi : SnRange(n, limit)) {
    ++total;
    Permutation image;
    try {
      image = apply_swap(map, pi, pair);
    } catch (const InternalError& e) {
      fail(e.what());
      continue;
    }
    const auto before = joint_counts(pi, pair.q1, pair.q2);
    const auto after = joint_counts(image, pair.q1, pair.q2);
    if (map == SwapMap::s17 && (before.first > 0 || before.second > 0)) ++structured;
    if (image == pi) ++fixed;
    if (after.first != before.second || after.second != before.first) {
      fail("f(" + pi.to_string() + ") = " + image.to_string() + " sends counts " +
           pair_text(before) + " to " + pair_text(after));
    }
    if (apply_swap(map, image, pair) != pi) {
      fail("f(f(" + pi.to_string() + ")) != " + pi.to_string());
    }
    if (auto [it, fresh] = preimage.try_emplace(image, pi); !fresh) {
      fail(it->second.to_string() + " and " + pi.to_string() + " both map to " +
           image.to_string());
    }
  }
  r.stats = {{"permutations", total}, {"fixed_points", fixed}, {"moved", total - fixed}};
  if (map == SwapMap::s17) r.stats.emplace_back("common_third_position_checks", structured);
  return r;
}

BijectionReport verify_iterated_swap(int n, const PatternPair& pair, int limit) {
  BijectionReport r{"S21", pair.id, n, true, std::nullopt, {}};
  std::map<Permutation, Permutation> preimage;
  std::int64_t avoid_q1 = 0;
  std::int64_t avoid_q2 = 0;
  std::int64_t collisions = 0;
  std::int64_t max_swaps = 0;
  const Count bound = binomial(n, 3);
  auto fail = [&](std::string why) {
    if (!r.counterexample) r.counterexample = std::move(why);
    r.pass = false;
  };
  for (const Permutation& pi : SnRange(n, limit)) {
    if (count_occurrences(pi, pair.q2) == 0) ++avoid_q2;
    if (count_occurrences(pi, pair.q1) != 0) continue;
    ++avoid_q1;
    IteratedSwap step;
    try {
      step = map_S21(pi, pair);
    } catch (const InternalError& e) {
      fail(e.what());
      continue;
    }
    max_swaps = std::max<std::int64_t>(max_swaps, step.swaps);
    if (count_occurrences(step.result, pair.q2) != 0) {
      fail("f(" + pi.to_string() + ") = " + step.result.to_string() + " contains q2");
    }
    if (auto [it, fresh] = preimage.try_emplace(step.result, pi); !fresh) {
      ++collisions;
      fail(it->second.to_string() + " and " + pi.to_string() + " both map to " +
           step.result.to_string());
    }
  }
  if (avoid_q1 != avoid_q2) {
    fail("|S_" + std::to_string(n) + "(q1)| = " + std::to_string(avoid_q1) + " but |S_" +
         std::to_string(n) + "(q2)| = " + std::to_string(avoid_q2));
  }
  if (max_swaps > bound) fail("needed " + std::to_string(max_swaps) + " swaps");
  r.stats = {{"avoiders_q1", avoid_q1},
             {"avoiders_q2", avoid_q2},
             {"distinct_images", static_cast<std::int64_t>(preimage.size())},
             {"collisions", collisions},
             {"max_swaps", max_swaps},
             {"swap_bound", bound}};
  return r;
}

}  // namespace

BijectionReport verify_swap_bijection(SwapMap map, int n, const PatternPair& pair, int limit) {
  check_capacity(n, limit);
  if (map == SwapMap::s21) return verify_iterated_swap(n, pair, limit);
  return verify_occurrence_swap(map, n, pair, limit);
}

}  // namespace meshperm
