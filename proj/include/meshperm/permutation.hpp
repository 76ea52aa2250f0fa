#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "meshperm/capacity.hpp"

namespace meshperm {

// A permutation of 1..n. Positions and values are 1-based in the public
// interface; storage is a plain vector of values.
class Permutation {
 public:
  using value_type = int;

  Permutation() = default;

  // Throws InvalidInput unless values is a rearrangement of 1..size.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  // "23154" for n <= 9, "10,2,1,..." for n >= 10. Commas are accepted for
  // any n on input.
  static Permutation parse(std::string_view text);
  std::string to_string() const;

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  // Entry at 1-based position i.
  int at(int position) const { return values_[position - 1]; }

  std::span<const int> values() const { return values_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}

  friend Permutation complement(const Permutation&);
  friend Permutation reverse(const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation standardize(std::span<const int>);
  friend Permutation swap_positions(const Permutation&, int, int);
  friend class SnRange;

  std::vector<int> values_;
};

Permutation complement(const Permutation& p);
Permutation reverse(const Permutation& p);
Permutation inverse(const Permutation& p);

// The unique permutation order-isomorphic to s. Throws InvalidInput on
// duplicate entries.
Permutation standardize(std::span<const int> s);

// 1-based positions i with p_i smaller than every earlier entry.
std::vector<int> left_to_right_minima(const Permutation& p);

// Copy of p with the entries at 1-based positions i and j exchanged.
Permutation swap_positions(const Permutation& p, int i, int j);

std::uint64_t factorial(int n);

// All permutations of 1..n in lexicographic order. With a fixed first entry
// only the permutations starting with that value are produced, still in
// lexicographic order; this is the unit of parallel work.
class SnRange {
 public:
  // Throws CapacityError if n is outside [0, limit].
  explicit SnRange(int n, int limit = default_capacity());
  SnRange(int n, int first_entry, int limit);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    friend class SnRange;
    Permutation current_;
    bool fixed_first_ = false;
    bool done_ = true;
  };

  iterator begin() const;
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
  int first_entry_;  // 0 = unrestricted
};

inline SnRange enumerate_sn(int n, int limit = default_capacity()) {
  return SnRange(n, limit);
}

}  // namespace meshperm
