#include "meshperm/mesh.hpp"

#include <algorithm>
#include <charconv>

#include "meshperm/error.hpp"

namespace meshperm {

namespace {

// Visits every strictly increasing 1-based index tuple of length m over
// 1..n in lexicographic order. The visitor returns false to stop early.
template <typename Visitor>
void for_each_tuple(int n, int m, Visitor&& visit) {
  if (m > n || m <= 0) return;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i + 1;
  while (true) {
    if (!visit(std::span<const int>(idx))) return;
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i + 1) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Fills sorted_values (size m+2, with sentinels) if the subsequence at
// positions is order-isomorphic to tau; returns false otherwise.
bool matches_order(const Permutation& pi, std::span<const int> positions,
                   const Permutation& tau, std::vector<int>& sorted_values) {
  const int m = tau.size();
  sorted_values.assign(m + 2, 0);
  sorted_values[m + 1] = pi.size() + 1;
  for (int i = 0; i < m; ++i) sorted_values[tau.at(i + 1)] = pi.at(positions[i]);
  for (int r = 1; r < m; ++r) {
    if (sorted_values[r] >= sorted_values[r + 1]) return false;
  }
  return true;
}

bool shading_clear(const DominanceTable& table, std::span<const int> positions,
                   const std::vector<int>& sorted_values, const MeshPattern& pat) {
  const int m = pat.length();
  const int n = table.permutation().size();
  for (const Box& b : pat.shading()) {
    const int pos_lo = b.col == 0 ? 0 : positions[b.col - 1];
    const int pos_hi = b.col == m ? n + 1 : positions[b.col];
    if (table.count_open(pos_lo, pos_hi, sorted_values[b.row], sorted_values[b.row + 1]) != 0) {
      return false;
    }
  }
  return true;
}

int parse_int(std::string_view s, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad integer '" + std::string(s) + "' in pattern '" + std::string(context) + "'");
  }
  return v;
}

}  // namespace

MeshPattern::MeshPattern(Permutation tau, std::vector<Box> shading)
    : tau_(std::move(tau)), shading_(std::move(shading)) {
  const int m = tau_.size();
  if (m == 0) throw InvalidInput("mesh pattern needs a nonempty classical pattern");
  for (const Box& b : shading_) {
    if (b.col < 0 || b.col > m || b.row < 0 || b.row > m) {
      throw InvalidInput("box (" + std::to_string(b.col) + "," + std::to_string(b.row) +
                         ") outside [0," + std::to_string(m) + "]^2");
    }
  }
  std::sort(shading_.begin(), shading_.end());
  shading_.erase(std::unique(shading_.begin(), shading_.end()), shading_.end());
}

bool MeshPattern::is_shaded(Box b) const {
  return std::binary_search(shading_.begin(), shading_.end(), b);
}

MeshPattern MeshPattern::parse(std::string_view text) {
  return parse_pattern_text(text).pattern;
}

std::string MeshPattern::to_string() const {
  std::string out = tau_.to_string() + "|";
  for (std::size_t i = 0; i < shading_.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(shading_[i].col) + "," + std::to_string(shading_[i].row);
  }
  return out;
}

ParsedPattern parse_pattern_text(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw ParseError("pattern '" + std::string(text) + "' lacks '|'");
  }
  Permutation tau = Permutation::parse(text.substr(0, bar));
  std::vector<Box> boxes;
  std::string_view rest = text.substr(bar + 1);
  while (!rest.empty()) {
    auto semi = rest.find(';');
    std::string_view item = rest.substr(0, semi);
    auto comma = item.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("box '" + std::string(item) + "' is not 'i,j' in '" + std::string(text) + "'");
    }
    boxes.push_back({parse_int(item.substr(0, comma), text), parse_int(item.substr(comma + 1), text)});
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
    if (rest.empty()) throw ParseError("trailing ';' in '" + std::string(text) + "'");
  }
  const int given = static_cast<int>(boxes.size());
  try {
    MeshPattern pattern(std::move(tau), std::move(boxes));
    const int kept = static_cast<int>(pattern.shading().size());
    return {std::move(pattern), given - kept};
  } catch (const InvalidInput& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

MeshPattern complement_pattern(const MeshPattern& p) {
  const int m = p.length();
  std::vector<Box> boxes;
  for (const Box& b : p.shading()) boxes.push_back({b.col, m - b.row});
  return MeshPattern(complement(p.tau()), std::move(boxes));
}

MeshPattern reverse_pattern(const MeshPattern& p) {
  const int m = p.length();
  std::vector<Box> boxes;
  for (const Box& b : p.shading()) boxes.push_back({m - b.col, b.row});
  return MeshPattern(reverse(p.tau()), std::move(boxes));
}

MeshPattern inverse_pattern(const MeshPattern& p) {
  std::vector<Box> boxes;
  for (const Box& b : p.shading()) boxes.push_back({b.row, b.col});
  return MeshPattern(inverse(p.tau()), std::move(boxes));
}

ShadingClass classify_shading(const MeshPattern& p) {
  ShadingClass out{true, true};
  const int m = p.length();
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      const bool a = p.is_shaded({i, j});
      const bool b = p.is_shaded({j, i});
      if (a && !b) out.symmetric = false;
      if (i < j && a == b) out.minus_antipodal = false;
    }
  }
  return out;
}

bool is_occurrence(const Permutation& pi, std::span<const int> positions,
                   const MeshPattern& pat) {
  const int n = pi.size();
  const int m = pat.length();
  if (static_cast<int>(positions.size()) != m) {
    throw InvalidInput("expected " + std::to_string(m) + " positions");
  }
  for (int i = 0; i < m; ++i) {
    if (positions[i] < 1 || positions[i] > n || (i > 0 && positions[i] <= positions[i - 1])) {
      throw InvalidInput("positions must be strictly increasing within 1.." + std::to_string(n));
    }
  }
  std::vector<int> chosen(m);
  for (int i = 0; i < m; ++i) chosen[i] = pi.at(positions[i]);
  if (standardize(chosen) != pat.tau()) return false;

  std::vector<int> pos(m + 2), val(m + 2);
  pos[0] = 0;
  pos[m + 1] = n + 1;
  std::copy(positions.begin(), positions.end(), pos.begin() + 1);
  std::sort(chosen.begin(), chosen.end());
  val[0] = 0;
  val[m + 1] = n + 1;
  std::copy(chosen.begin(), chosen.end(), val.begin() + 1);

  for (const Box& b : pat.shading()) {
    for (int x = pos[b.col] + 1; x < pos[b.col + 1]; ++x) {
      const int v = pi.at(x);
      if (v > val[b.row] && v < val[b.row + 1]) return false;
    }
  }
  return true;
}

DominanceTable::DominanceTable(const Permutation& pi)
    : pi_(&pi), stride_(pi.size() + 2), prefix_(stride_ * stride_, 0) {
  const int n = pi.size();
  for (int pos = 1; pos <= n + 1; ++pos) {
    const int v = pos <= n ? pi.at(pos) : n + 2;
    for (int val = 0; val <= n + 1; ++val) {
      prefix_[pos * stride_ + val] = prefix_[(pos - 1) * stride_ + val] + (v <= val ? 1 : 0);
    }
  }
}

int DominanceTable::count_open(int pos_lo, int pos_hi, int val_lo, int val_hi) const {
  if (pos_hi - pos_lo < 2 || val_hi - val_lo < 2) return 0;
  return prefix(pos_hi - 1, val_hi - 1) - prefix(pos_lo, val_hi - 1) -
         prefix(pos_hi - 1, val_lo) + prefix(pos_lo, val_lo);
}

std::int64_t count_occurrences(const DominanceTable& table, const MeshPattern& pat) {
  const Permutation& pi = table.permutation();
  std::int64_t count = 0;
  std::vector<int> sorted_values;
  for_each_tuple(pi.size(), pat.length(), [&](std::span<const int> positions) {
    if (matches_order(pi, positions, pat.tau(), sorted_values) &&
        shading_clear(table, positions, sorted_values, pat)) {
      ++count;
    }
    return true;
  });
  return count;
}

std::int64_t count_occurrences(const Permutation& pi, const MeshPattern& pat) {
  if (pat.length() > pi.size()) return 0;
  return count_occurrences(DominanceTable(pi), pat);
}

std::int64_t count_occurrences_naive(const Permutation& pi, const MeshPattern& pat) {
  std::int64_t count = 0;
  for_each_tuple(pi.size(), pat.length(), [&](std::span<const int> positions) {
    if (is_occurrence(pi, positions, pat)) ++count;
    return true;
  });
  return count;
}

std::vector<std::vector<int>> occurrences(const Permutation& pi, const MeshPattern& pat) {
  std::vector<std::vector<int>> out;
  if (pat.length() > pi.size()) return out;
  DominanceTable table(pi);
  std::vector<int> sorted_values;
  for_each_tuple(pi.size(), pat.length(), [&](std::span<const int> positions) {
    if (matches_order(pi, positions, pat.tau(), sorted_values) &&
        shading_clear(table, positions, sorted_values, pat)) {
      out.emplace_back(positions.begin(), positions.end());
    }
    return true;
  });
  return out;
}

std::pair<std::int64_t, std::int64_t> joint_counts(const Permutation& pi,
                                                   const MeshPattern& q1,
                                                   const MeshPattern& q2) {
  DominanceTable table(pi);
  auto count = [&](const MeshPattern& q) -> std::int64_t {
    return q.length() > pi.size() ? 0 : count_occurrences(table, q);
  };
  return {count(q1), count(q2)};
}

}  // namespace meshperm
