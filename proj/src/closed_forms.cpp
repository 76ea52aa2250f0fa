#include "meshperm/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "meshperm/error.hpp"

namespace meshperm {

namespace {

void require_at_least(int n, int minimum, const char* what) {
  if (n < minimum) {
    throw InvalidInput(std::string(what) + " needs n >= " + std::to_string(minimum) +
                       ", got " + std::to_string(n));
  }
}

Count scaled(Count factor, Count value) { return checked_mul(factor, value); }

JointTable table_from(int n, int rows, int cols, auto&& entry) {
  JointTable t(n);
  for (int k = 0; k < rows; ++k) {
    for (int l = 0; l < cols; ++l) {
      const Count v = entry(k, l);
      if (v < 0) {
        throw InternalError("recurrence produced " + std::to_string(v) + " at n=" +
                            std::to_string(n) + ", k=" + std::to_string(k) +
                            ", l=" + std::to_string(l));
      }
      t.add(k, l, v);
    }
  }
  return t;
}

}  // namespace

StirlingTable::StirlingTable(int max_n) {
  if (max_n < 0) throw InvalidInput("StirlingTable needs max_n >= 0");
  rows_.assign(max_n + 1, {});
  rows_[0] = {1};
  for (int n = 1; n <= max_n; ++n) {
    rows_[n].assign(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
      const Count stay = k <= n - 1 ? scaled(n - 1, rows_[n - 1][k]) : 0;
      rows_[n][k] = checked_add(stay, rows_[n - 1][k - 1]);
    }
  }
}

Count StirlingTable::operator()(int n, int k) const {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > max_n()) {
    throw InvalidInput("Stirling table holds n <= " + std::to_string(max_n()) + ", asked for " +
                       std::to_string(n));
  }
  return rows_[n][k];
}

Count stirling_first(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return StirlingTable(n)(n, k);
}

Count binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (int i = 0; i < k; ++i) r = checked_mul(r, n - i) / (i + 1);
  return r;
}

Count lemma31_tilde_T(int n, int k) {
  require_at_least(n, 0, "lemma31_tilde_T");
  if (n == 0) return k == 0 ? 1 : 0;
  return stirling_first(n, k + 1);
}

JointTable thm32_table(int n) {
  require_at_least(n, 2, "thm32_table");
  const StirlingTable c(n - 1);
  return table_from(n, n - 1, n - 1, [&](int k, int l) -> Count {
    if (k == 0 && l == 0) return scaled(2, checked_add(c(n - 1, 2), c(n - 1, 1)));
    if (l == 0) return checked_add(scaled(k + 2, c(n - 1, k + 2)), c(n - 1, k + 1));
    if (k == 0) return checked_add(scaled(l + 2, c(n - 1, l + 2)), c(n - 1, l + 1));
    return scaled(binomial(k + l + 2, k + 1), c(n - 1, k + l + 2));
  });
}

Count thm32_convolution(int n, int k, int l) {
  require_at_least(n, 1, "thm32_convolution");
  Count sum = 0;
  for (int i = 0; i <= n - 1; ++i) {
    const Count term = checked_mul(lemma31_tilde_T(i, k), lemma31_tilde_T(n - 1 - i, l));
    sum = checked_add(sum, checked_mul(binomial(n - 1, i), term));
  }
  return sum;
}

Count harmonic_a(int n) {
  require_at_least(n, 0, "harmonic_a");
  const auto fact = static_cast<Count>(factorial(n));
  Count sum = fact;
  for (int i = 1; i <= n; ++i) sum = checked_add(sum, fact / i);
  return sum;
}

SplitTable thm21_tables(int n) {
  require_at_least(n, 2, "thm21_tables");
  SplitTable s{2, {JointTable(2, {{1}}), JointTable(2, {{1}}), JointTable(2)}};
  for (int m = 3; m <= n; ++m) {
    const JointTable& down = s.parts[0];
    const JointTable& up = s.parts[1];
    const int rows = std::max(down.rows(), up.rows()) + 1;
    const int cols = std::max(down.cols(), up.cols()) + 1;
    SplitTable next{m, {JointTable(m), JointTable(m), JointTable(m)}};
    next.parts[0] = table_from(m, rows, cols, [&](int k, int l) {
      return checked_add(checked_add(scaled(m - 2, down.at(k, l)), down.at(k, l - 1)),
                         up.at(k, l));
    });
    next.parts[1] = table_from(m, rows, cols, [&](int k, int l) {
      return checked_add(checked_add(down.at(k, l), scaled(m - 2, up.at(k, l))),
                         up.at(k - 1, l));
    });
    next.parts[2] = JointTable(m);
    s = std::move(next);
  }
  return s;
}

SplitTable thm33_initial() {
  return SplitTable{2, {JointTable(2, {{1}}), JointTable(2, {{1}}), JointTable(2)}};
}

SplitTable thm33_tables(int n, const SplitTable& seed) {
  require_at_least(seed.n, 2, "thm33_tables seed");
  if (n < seed.n) {
    throw InvalidInput("thm33_tables cannot go below its seed at n=" + std::to_string(seed.n));
  }
  SplitTable s = seed;
  for (int m = seed.n + 1; m <= n; ++m) {
    const JointTable& first = s.parts[0];
    const JointTable& last = s.parts[1];
    const JointTable& inner = s.parts[2];
    const JointTable total = s.total();
    const int rows = total.rows() + 1;
    const int cols = total.cols() + 1;
    SplitTable next{m, {JointTable(m), JointTable(m), JointTable(m)}};
    next.parts[0] = table_from(m, rows, cols, [&](int k, int l) {
      return checked_add(checked_add(first.at(k, l - 1), last.at(k, l)), inner.at(k, l - 1));
    });
    next.parts[1] = table_from(m, rows, cols, [&](int k, int l) {
      return checked_add(checked_add(first.at(k, l), last.at(k - 1, l)), inner.at(k - 1, l));
    });
    next.parts[2] = table_from(m, rows, cols, [&](int k, int l) {
      return scaled(m - 2, total.at(k, l));
    });
    s = std::move(next);
  }
  return s;
}

BivarPoly thm34_polynomial(int n) {
  require_at_least(n, 2, "thm34_polynomial");
  BivarPoly before = BivarPoly::constant(2);
  if (n == 2) return before;
  BivarPoly current = BivarPoly::x() + BivarPoly::y() + BivarPoly::constant(4);
  const BivarPoly one_minus_xy = BivarPoly::constant(1) - BivarPoly::x() * BivarPoly::y();
  for (int m = 4; m <= n; ++m) {
    const BivarPoly factor = BivarPoly::constant(m - 2) + BivarPoly::x() + BivarPoly::y();
    BivarPoly next = factor * current + one_minus_xy * before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

Count thm34_recurrence_check(int n, int k, int l) {
  require_at_least(n, 4, "thm34_recurrence_check");
  const BivarPoly prev = thm34_polynomial(n - 1);
  const BivarPoly prev2 = thm34_polynomial(n - 2);
  Count v = scaled(n - 2, prev.coefficient(k, l));
  v = checked_add(v, prev.coefficient(k - 1, l));
  v = checked_add(v, prev.coefficient(k, l - 1));
  v = checked_add(v, prev2.coefficient(k, l));
  return checked_sub(v, prev2.coefficient(k - 1, l - 1));
}

std::vector<Count> cor35_marginal(int n) {
  require_at_least(n, 2, "cor35_marginal");
  std::vector<Count> before{2};
  if (n == 2) return before;
  std::vector<Count> current{5, 1};
  auto at = [](const std::vector<Count>& v, int k) -> Count {
    return k >= 0 && k < static_cast<int>(v.size()) ? v[k] : 0;
  };
  for (int m = 4; m <= n; ++m) {
    std::vector<Count> next(current.size() + 1, 0);
    for (int k = 0; k < static_cast<int>(next.size()); ++k) {
      Count v = checked_add(scaled(m - 1, at(current, k)), at(current, k - 1));
      v = checked_add(v, at(before, k));
      next[k] = checked_sub(v, at(before, k - 1));
    }
    while (!next.empty() && next.back() == 0) next.pop_back();
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

VandermondeSides chu_vandermonde_sides(int n, int m, int r) {
  if (r < 0 || r > m || m > n) {
    throw InvalidInput("chu_vandermonde needs 0 <= r <= m <= n");
  }
  const StirlingTable c(n);
  VandermondeSides sides;
  for (int i = m - r; i <= n - r; ++i) {
    const Count term = checked_mul(c(i, m - r), c(n - i, r));
    sides.left = checked_add(sides.left, checked_mul(binomial(n, i), term));
  }
  sides.right = checked_mul(binomial(m, r), c(n, m));
  return sides;
}

bool chu_vandermonde_check(int n, int m, int r) {
  const VandermondeSides s = chu_vandermonde_sides(n, m, r);
  return s.left == s.right;
}

Count unweighted_stirling_convolution(int n, int m, int r) {
  if (r < 0 || r > m || m > n) {
    throw InvalidInput("chu_vandermonde needs 0 <= r <= m <= n");
  }
  const StirlingTable c(n);
  Count sum = 0;
  for (int i = m - r; i <= n - r; ++i) sum = checked_add(sum, checked_mul(c(i, m - r), c(n - i, r)));
  return sum;
}

}  // namespace meshperm
