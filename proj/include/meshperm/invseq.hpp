#pragma once

#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "meshperm/capacity.hpp"
#include "meshperm/checked.hpp"

namespace meshperm {

// e_1..e_n with 0 <= e_i <= i-1.
class InversionSequence {
 public:
  InversionSequence() = default;
  // Throws InvalidInput if some entry is out of bounds.
  explicit InversionSequence(std::vector<int> entries);

  // "0,1,1"
  static InversionSequence parse(std::string_view text);
  std::string to_string() const;

  int size() const { return static_cast<int>(entries_.size()); }
  // Entry at 1-based index i.
  int at(int i) const { return entries_[i - 1]; }
  std::span<const int> entries() const { return entries_; }

  auto operator<=>(const InversionSequence&) const = default;

 private:
  friend class InversionSequenceRange;
  std::vector<int> entries_;
};

// All inversion sequences of length n in lexicographic order.
class InversionSequenceRange {
 public:
  // Throws CapacityError if n is outside [0, limit].
  explicit InversionSequenceRange(int n, int limit = default_capacity());

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = InversionSequence;
    using difference_type = std::ptrdiff_t;
    using pointer = const InversionSequence*;
    using reference = const InversionSequence&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    friend class InversionSequenceRange;
    InversionSequence current_;
    bool done_ = true;
  };

  iterator begin() const;
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
};

inline InversionSequenceRange enumerate_inversion_sequences(int n,
                                                            int limit = default_capacity()) {
  return InversionSequenceRange(n, limit);
}

// Number of j with e_j = e_{j+1} != 0.
int vincular_stat(const InversionSequence& e);

// Index k: number of length-n sequences with vincular_stat = k.
std::vector<Count> I_distribution(int n, int limit = default_capacity());
Count count_I(int n, int k, int limit = default_capacity());

// I_{n,k} = (n-1)I_{n-1,k} + I_{n-1,k-1} + I_{n-2,k} - I_{n-2,k-1} for
// n >= 4, with I_2 and I_3 counted directly.
Count thm36_recurrence(int n, int k, int limit = default_capacity());

}  // namespace meshperm
