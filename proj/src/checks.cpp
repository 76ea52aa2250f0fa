#include "meshperm/checks.hpp"

#include <algorithm>
#include <sstream>

#include "meshperm/closed_forms.hpp"
#include "meshperm/error.hpp"
#include "meshperm/invseq.hpp"

namespace meshperm {

namespace {

std::string show(const std::vector<Count>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

std::string show(const JointTable& t) {
  std::string out = "[";
  for (int k = 0; k < t.rows(); ++k) {
    std::vector<Count> row;
    for (int l = 0; l < t.cols(); ++l) row.push_back(t.at(k, l));
    out += (k ? "," : "") + show(row);
  }
  return out + "]";
}

std::vector<Count> trimmed(std::vector<Count> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::string range_text(int lo, int hi) {
  return std::to_string(lo) + "<=n<=" + std::to_string(hi);
}

std::vector<std::string> range_ids(char table, int from, int to) {
  std::vector<std::string> ids;
  for (int i = from; i <= to; ++i) ids.push_back(table + std::to_string(i));
  return ids;
}

bool never_both(const JointTable& t) {
  for (int k = 1; k < t.rows(); ++k) {
    for (int l = 1; l < t.cols(); ++l) {
      if (t.at(k, l) != 0) return false;
    }
  }
  return true;
}

bool is_never_both_pair(const PatternPair& p) {
  return p.method == Method::element_swap;
}

}  // namespace

bool CheckReport::pass() const {
  return std::ranges::all_of(lines, [](const CheckLine& l) { return l.pass || !l.fatal; });
}

TableCache::TableCache(const std::vector<PatternPair>& catalog, DistributionOptions options)
    : catalog_(&catalog), options_(options) {}

const JointTable& TableCache::get(std::string_view id, int n) {
  const auto key = std::make_pair(std::string(id), n);
  if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  const PatternPair& p = pair(id);
  return tables_.emplace(key, joint_distribution(n, p.q1, p.q2, options_)).first->second;
}

CheckReport run_verify(TableCache& cache, const VerifyOptions& options) {
  check_capacity(options.n_max, cache.limit());
  std::vector<const PatternPair*> selected;
  if (options.pairs.empty()) {
    for (const PatternPair& p : cache.catalog()) selected.push_back(&p);
  } else {
    for (const std::string& id : options.pairs) selected.push_back(&cache.pair(id));
  }

  CheckReport report;
  for (const PatternPair* p : selected) {
    int failed_at = 0;
    for (int n = 2; n <= options.n_max && failed_at == 0; ++n) {
      if (!is_jointly_symmetric(cache.get(p->id, n))) failed_at = n;
    }
    CheckLine line{p->id + " symmetric", failed_at == 0, "", true};
    if (p->status == Status::conjectured) {
      line.name = p->id + " conjecture";
      line.fatal = options.strict;
      line.detail = failed_at == 0
                        ? "conjecture holds at n<=" + std::to_string(options.n_max)
                        : "conjecture fails at n=" + std::to_string(failed_at);
    } else {
      line.detail = failed_at == 0 ? "T[k][l] == T[l][k] for " + range_text(2, options.n_max)
                                   : "asymmetric table at n=" + std::to_string(failed_at);
    }
    report.add(std::move(line));

    if (is_never_both_pair(*p)) {
      int both_at = 0;
      for (int n = 2; n <= options.n_max && both_at == 0; ++n) {
        if (!never_both(cache.get(p->id, n))) both_at = n;
      }
      report.add({p->id + " never-both", both_at == 0,
                  both_at == 0 ? "no permutation contains both patterns, n<=" +
                                     std::to_string(options.n_max)
                               : "some permutation contains both at n=" + std::to_string(both_at),
                  true});
    }
  }

  for (const auto& frame : frames(cache.catalog())) {
    std::vector<const PatternPair*> members;
    for (const PatternPair* m : frame) {
      if (std::ranges::find(selected, m) != selected.end()) members.push_back(m);
    }
    if (members.size() < 2) continue;
    std::string mismatch;
    const bool conjectured = std::ranges::any_of(
        members, [](const PatternPair* m) { return m->status == Status::conjectured; });
    for (int n = 2; n <= options.n_max && mismatch.empty(); ++n) {
      const JointTable& lead = cache.get(members.front()->id, n);
      for (std::size_t i = 1; i < members.size(); ++i) {
        if (cache.get(members[i]->id, n) != lead) {
          mismatch = members[i]->id + " differs from " + members.front()->id + " at n=" +
                     std::to_string(n);
          break;
        }
      }
    }
    report.add({"frame " + frame.front()->frame, mismatch.empty(),
                mismatch.empty() ? std::to_string(members.size()) + " pairs share one table for " +
                                       range_text(2, options.n_max)
                                 : mismatch,
                !conjectured || options.strict});
  }
  return report;
}

CheckLine check_thm21(TableCache& cache, int n_max, int split_n_max) {
  CheckLine line{"thm21", true, "", true};
  for (int n = 2; n <= n_max; ++n) {
    const SplitTable s = thm21_tables(n);
    const JointTable total = s.total();
    for (const char* id : {"S19", "S20"}) {
      if (total != cache.get(id, n)) {
        line.pass = false;
        line.detail = "recurrence total differs from " + std::string(id) + " at n=" +
                      std::to_string(n) + ": " + show(total) + " vs " + show(cache.get(id, n));
        return line;
      }
    }
    if (n <= split_n_max) {
      const PatternPair& p = cache.pair("S19");
      const SplitTable brute = split_distribution(n, p.q1, p.q2, classify_by_first_two, cache.limit());
      for (int part = 0; part < 2; ++part) {
        if (brute.parts[part] != s.parts[part]) {
          line.pass = false;
          line.detail = "split part " + std::to_string(part + 1) + " differs at n=" +
                        std::to_string(n);
          return line;
        }
      }
    }
  }
  line.detail = "split recurrences == S19 and S20 tables for " + range_text(2, n_max) +
                ", parts == p1>p2 / p1<p2 classes for n<=" + std::to_string(split_n_max);
  return line;
}

CheckLine check_lemma31(int n_max, int limit) {
  const MeshPattern base = MeshPattern::parse("12|0,0;1,0;2,0;2,1");
  const MeshPattern falling = MeshPattern::parse("21|0,1;1,1;2,1;2,2");
  const std::vector<MeshPattern> patterns = {base, complement_pattern(base), falling,
                                             complement_pattern(falling)};
  const StirlingTable c(n_max);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Count> expected;
    for (int k = 0; k < n; ++k) expected.push_back(c(n, k + 1));
    for (const MeshPattern& p : patterns) {
      const std::vector<Count> got = trimmed(occurrence_distribution(n, p, limit));
      if (got != trimmed(expected)) {
        return {"lemma31", false,
                p.to_string() + " at n=" + std::to_string(n) + ": " + show(got) + " vs " +
                    show(expected),
                true};
      }
    }
  }
  return {"lemma31", true,
          "tilde_T(n,k) == c(n,k+1) for all k, 1<=n<=" + std::to_string(n_max) + ", " +
              std::to_string(patterns.size()) + " patterns",
          true};
}

CheckLine check_thm32(TableCache& cache, int n_max) {
  for (int n = 2; n <= n_max; ++n) {
    const JointTable closed = thm32_table(n);
    const JointTable& brute = cache.get("A17", n);
    if (closed != brute) {
      return {"thm32", false,
              "closed form differs from A17 at n=" + std::to_string(n) + ": " + show(closed) +
                  " vs " + show(brute),
              true};
    }
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) {
        if (thm32_convolution(n, k, l) != closed.at(k, l)) {
          return {"thm32", false,
                  "convolution differs at (n,k,l)=(" + std::to_string(n) + "," +
                      std::to_string(k) + "," + std::to_string(l) + ")",
                  true};
        }
      }
    }
  }
  return {"thm32", true,
          "piecewise == convolution == A17 table for " + range_text(2, n_max), true};
}

CheckLine check_thm32_convolution(int n_max) {
  for (int n = 2; n <= n_max; ++n) {
    const JointTable closed = thm32_table(n);
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) {
        const Count conv = thm32_convolution(n, k, l);
        if (conv != closed.at(k, l) || conv != thm32_convolution(n, l, k)) {
          return {"thm32 convolution", false,
                  "mismatch at (n,k,l)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                      std::to_string(l) + ")",
                  true};
        }
      }
    }
  }
  return {"thm32 convolution", true,
          "piecewise == convolution, symmetric in (k,l), for " + range_text(2, n_max), true};
}

CheckLine check_harmonic(int n_max) {
  const std::vector<Count> expected = {1, 2, 5, 17, 74};
  for (int i = 0; i < static_cast<int>(expected.size()); ++i) {
    if (harmonic_a(i) != expected[i]) {
      return {"harmonic", false,
              "a_" + std::to_string(i) + " = " + std::to_string(harmonic_a(i)), true};
    }
  }
  for (int n = 2; n <= n_max; ++n) {
    if (thm32_table(n).at(0, 0) != 2 * harmonic_a(n - 2)) {
      return {"harmonic", false, "T(n,0,0) != 2a(n-2) at n=" + std::to_string(n), true};
    }
  }
  return {"harmonic", true,
          "a = 1,2,5,17,74 and T(n,0,0) == 2a(n-2) for " + range_text(2, n_max), true};
}

CheckLine check_thm33(TableCache& cache, int n_max, int split_n_max) {
  const PatternPair& p = cache.pair("A25");
  const SplitTable seed = split_distribution(3, p.q1, p.q2, classify_by_max_position, cache.limit());
  const std::vector<std::string> frame = range_ids('A', 25, 32);
  for (int n = 3; n <= n_max; ++n) {
    const SplitTable s = thm33_tables(n, seed);
    const JointTable total = s.total();
    for (const std::string& id : frame) {
      if (total != cache.get(id, n)) {
        return {"thm33", false,
                "recurrence total differs from " + id + " at n=" + std::to_string(n), true};
      }
    }
    if (thm33_tables(n, thm33_initial()).total() != total) {
      return {"thm33", false,
              "iterating from n=2 disagrees with the n=3 seed at n=" + std::to_string(n), true};
    }
    if (n <= split_n_max) {
      const SplitTable brute =
          split_distribution(n, p.q1, p.q2, classify_by_max_position, cache.limit());
      for (int part = 0; part < 3; ++part) {
        if (brute.parts[part] != s.parts[part]) {
          return {"thm33", false,
                  "split part " + std::to_string(part + 1) + " differs at n=" + std::to_string(n),
                  true};
        }
      }
    }
  }
  return {"thm33", true,
          "n=3 seeded recurrences == A25..A32 tables for " + range_text(3, n_max) +
              ", parts == position-of-n classes for n<=" + std::to_string(split_n_max),
          true};
}

CheckLine check_thm34(TableCache& cache, int n_max) {
  if (thm34_polynomial(4).to_string() != "x^2 + y^2 + 6x + 6y + 10") {
    return {"thm34", false, "T_4 = " + thm34_polynomial(4).to_string(), true};
  }
  for (int n = 2; n <= n_max; ++n) {
    const BivarPoly closed = thm34_polynomial(n);
    const BivarPoly brute = to_polynomial(cache.get("A33", n));
    if (closed != brute) {
      return {"thm34", false,
              "at n=" + std::to_string(n) + ": " + closed.to_string() + " vs " + brute.to_string(),
              true};
    }
  }
  return {"thm34", true,
          "polynomial recurrence == A33 polynomial for " + range_text(2, n_max) +
              "; T_4 = x^2 + y^2 + 6x + 6y + 10",
          true};
}

CheckLine check_thm34_coefficients(int n_max) {
  for (int n = 4; n <= n_max; ++n) {
    const BivarPoly poly = thm34_polynomial(n);
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) {
        if (thm34_recurrence_check(n, k, l) != poly.coefficient(k, l)) {
          return {"thm34 coefficients", false,
                  "mismatch at (n,k,l)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                      std::to_string(l) + ")",
                  true};
        }
      }
    }
  }
  return {"thm34 coefficients", true,
          "coefficient recurrence == polynomial recurrence for " + range_text(4, n_max), true};
}

CheckLine check_cor35(TableCache& cache, int n_max) {
  if (cor35_marginal(4) != std::vector<Count>{17, 6, 1} ||
      cor35_marginal(5) != std::vector<Count>{73, 37, 9, 1}) {
    return {"cor35", false,
            "T_4 = " + show(cor35_marginal(4)) + ", T_5 = " + show(cor35_marginal(5)), true};
  }
  for (int n = 2; n <= n_max; ++n) {
    const std::vector<Count> expected = cor35_marginal(n);
    Count sum = 0;
    for (Count c : expected) sum += c;
    if (sum != static_cast<Count>(factorial(n))) {
      return {"cor35", false, "row sum at n=" + std::to_string(n) + " is " + std::to_string(sum),
              true};
    }
    if (thm34_polynomial(n).at_y_one() != expected) {
      return {"cor35", false, "T_n(x,1) differs at n=" + std::to_string(n), true};
    }
    for (const std::string& id : range_ids('A', 25, 36)) {
      const std::vector<Count> got = marginal(cache.get(id, n), Axis::first);
      if (got != expected) {
        return {"cor35", false,
                id + " marginal at n=" + std::to_string(n) + ": " + show(got) + " vs " +
                    show(expected),
                true};
      }
    }
  }
  return {"cor35", true,
          "A25..A36 first marginals == recurrence for " + range_text(2, n_max) +
              "; T_4 = [17,6,1], T_5 = [73,37,9,1]",
          true};
}

CheckLine check_thm36(int n_max, int limit) {
  if (count_I(3, 1, limit) != 1) return {"thm36", false, "I(3,1) != 1", true};
  for (int n = 2; n <= n_max; ++n) {
    const std::vector<Count> brute = I_distribution(n, limit);
    const std::vector<Count> expected = cor35_marginal(n);
    if (brute != expected) {
      return {"thm36", false,
              "I(" + std::to_string(n) + ",k) = " + show(brute) + " vs T = " + show(expected), true};
    }
    for (int k = 0; k <= static_cast<int>(brute.size()); ++k) {
      const Count want = k < static_cast<int>(brute.size()) ? brute[k] : 0;
      if (thm36_recurrence(n, k, limit) != want) {
        return {"thm36", false,
                "recurrence differs at (n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")",
                true};
      }
    }
  }
  return {"thm36", true,
          "I(n,k) == T(n,k) for all k, " + range_text(2, n_max) +
              "; recurrence matches; I(3,1) = 1",
          true};
}

CheckLine check_chu_vandermonde(int n_max) {
  int cases = 0;
  int unweighted_failures = 0;
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (int r = 0; r <= m; ++r) {
        ++cases;
        const VandermondeSides s = chu_vandermonde_sides(n, m, r);
        if (s.left != s.right) {
          return {"chu-vandermonde", false,
                  "fails at (n,m,r)=(" + std::to_string(n) + "," + std::to_string(m) + "," +
                      std::to_string(r) + ")",
                  true};
        }
        if (unweighted_stirling_convolution(n, m, r) != s.right) ++unweighted_failures;
      }
    }
  }
  return {"chu-vandermonde", true,
          "sum C(n,i)c(i,m-r)c(n-i,r) == C(m,r)c(n,m) for all " + std::to_string(cases) +
              " cases 0<=r<=m<=n<=" + std::to_string(n_max) + " (without the C(n,i) weight " +
              std::to_string(unweighted_failures) + " cases fail)",
          true};
}

CheckReport run_crosscheck(TableCache& cache, int n_max) {
  check_capacity(n_max, cache.limit());
  const int split_n_max = std::min(n_max, 6);
  CheckReport report;
  report.add(check_thm21(cache, n_max, split_n_max));
  report.add(check_lemma31(n_max, cache.limit()));
  report.add(check_thm32(cache, n_max));
  report.add(check_thm32_convolution(std::max(n_max, 9)));
  report.add(check_harmonic(n_max));
  report.add(check_thm33(cache, n_max, split_n_max));
  report.add(check_thm34(cache, n_max));
  report.add(check_thm34_coefficients(std::max(n_max, 9)));
  report.add(check_cor35(cache, n_max));
  report.add(check_thm36(n_max, cache.limit()));
  report.add(check_chu_vandermonde(std::max(n_max, 10)));
  return report;
}

}  // namespace meshperm
