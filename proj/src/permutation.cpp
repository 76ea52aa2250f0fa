#include "meshperm/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "meshperm/error.hpp"

namespace meshperm {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw InvalidInput("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view item = text.substr(start, comma - start);
      if (item.empty()) throw ParseError("empty entry in permutation '" + std::string(text) + "'");
      int v = 0;
      for (char c : item) {
        if (c < '0' || c > '9') throw ParseError("bad permutation '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
        if (v > 1000) throw ParseError("entry too large in '" + std::string(text) + "'");
      }
      values.push_back(v);
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("bad permutation '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const InvalidInput& e) {
    throw ParseError("'" + std::string(text) + "' is " + e.what());
  }
}

std::string Permutation::to_string() const {
  std::string out;
  const bool commas = size() >= 10;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (commas && i > 0) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation complement(const Permutation& p) {
  std::vector<int> v(p.values_);
  const int n = p.size();
  for (int& x : v) x = n + 1 - x;
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values_.rbegin(), p.values_.rend());
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<int> v(p.values_.size());
  for (int i = 0; i < p.size(); ++i) v[p.values_[i] - 1] = i + 1;
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation standardize(std::span<const int> s) {
  std::vector<int> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return s[a] < s[b]; });
  std::vector<int> v(s.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && s[order[rank]] == s[order[rank - 1]]) {
      throw InvalidInput("standardize: duplicate entry " + std::to_string(s[order[rank]]));
    }
    v[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(v), Permutation::Unchecked{});
}

std::vector<int> left_to_right_minima(const Permutation& p) {
  std::vector<int> positions;
  int best = p.size() + 1;
  for (int i = 1; i <= p.size(); ++i) {
    if (p.at(i) < best) {
      best = p.at(i);
      positions.push_back(i);
    }
  }
  return positions;
}

Permutation swap_positions(const Permutation& p, int i, int j) {
  std::vector<int> v(p.values_);
  std::swap(v[i - 1], v[j - 1]);
  return Permutation(std::move(v), Permutation::Unchecked{});
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > kIntegerWidthCeiling) {
    throw OverflowError("factorial(" + std::to_string(n) + ") is outside the 64-bit range");
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

SnRange::SnRange(int n, int limit) : n_(n), first_entry_(0) {
  check_capacity(n, limit);
}

SnRange::SnRange(int n, int first_entry, int limit) : n_(n), first_entry_(first_entry) {
  check_capacity(n, limit);
  if (first_entry < 1 || first_entry > n) {
    throw InvalidInput("first entry " + std::to_string(first_entry) + " out of range 1.." +
                       std::to_string(n));
  }
}

SnRange::iterator SnRange::begin() const {
  iterator it;
  std::vector<int> v(n_);
  std::iota(v.begin(), v.end(), 1);
  if (first_entry_ != 0) {
    std::rotate(v.begin(), v.begin() + (first_entry_ - 1), v.begin() + first_entry_);
  }
  it.current_ = Permutation(std::move(v), Permutation::Unchecked{});
  it.fixed_first_ = first_entry_ != 0;
  it.done_ = false;
  return it;
}

SnRange::iterator& SnRange::iterator::operator++() {
  auto& v = current_.values_;
  auto from = fixed_first_ && !v.empty() ? v.begin() + 1 : v.begin();
  done_ = !std::next_permutation(from, v.end());
  return *this;
}

}  // namespace meshperm
