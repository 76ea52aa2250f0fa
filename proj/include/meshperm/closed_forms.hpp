#pragma once

#include <vector>

#include "meshperm/checked.hpp"
#include "meshperm/dist.hpp"

namespace meshperm {

// Unsigned Stirling numbers of the first kind c(n,k), 0 <= k <= n <= max_n,
// from c(n,k) = (n-1)c(n-1,k) + c(n-1,k-1) with c(0,0) = 1.
class StirlingTable {
 public:
  // Throws OverflowError if a row does not fit the count type.
  explicit StirlingTable(int max_n);

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }
  // Zero for k > n, k < 0 or n < 0. Throws InvalidInput for n > max_n().
  Count operator()(int n, int k) const;

 private:
  std::vector<std::vector<Count>> rows_;
};

Count stirling_first(int n, int k);
Count binomial(int n, int k);

// Permutations of length n with k occurrences of 12 whose shading keeps
// the bottom row and right column empty: c(n, k+1).
Count lemma31_tilde_T(int n, int k);

// Piecewise closed form for the pair whose occurrences all start at the
// first entry. Requires n >= 2.
JointTable thm32_table(int n);
// Same entries as a binomial convolution of lemma31_tilde_T values.
Count thm32_convolution(int n, int k, int l);
// n! (1 + 1 + 1/2 + ... + 1/n), exact.
Count harmonic_a(int n);

// Split by p_1 > p_2 (part 0) and p_1 < p_2 (part 1), iterated from n = 2.
SplitTable thm21_tables(int n);

// Split by the position of n: first (part 0), last (part 1), interior
// (part 2). Iterates upward from seed, which must satisfy seed.n <= n and
// seed.n >= 2.
SplitTable thm33_tables(int n, const SplitTable& seed);
// The n = 2 split: 21 in part 0, 12 in part 1.
SplitTable thm33_initial();

// T_n(x,y) = (n + x + y - 2) T_{n-1} + (1 - xy) T_{n-2}, T_2 = 2,
// T_3 = x + y + 4. Requires n >= 2.
BivarPoly thm34_polynomial(int n);
// Coefficient of x^k y^l of T_n from the coefficients of T_{n-1} and
// T_{n-2}. Requires n >= 4.
Count thm34_recurrence_check(int n, int k, int l);

// T_{n,k} = (n-1)T_{n-1,k} + T_{n-1,k-1} + T_{n-2,k} - T_{n-2,k-1},
// T_2 = [2], T_3 = [5,1]. Requires n >= 2.
std::vector<Count> cor35_marginal(int n);

struct VandermondeSides {
  Count left = 0;
  Count right = 0;
};
// sum_i C(n,i) c(i,m-r) c(n-i,r) against C(m,r) c(n,m), i from m-r to n-r.
VandermondeSides chu_vandermonde_sides(int n, int m, int r);
// Requires 0 <= r <= m <= n.
bool chu_vandermonde_check(int n, int m, int r);
// The unweighted sum sum_i c(i,m-r) c(n-i,r).
Count unweighted_stirling_convolution(int n, int m, int r);

}  // namespace meshperm
