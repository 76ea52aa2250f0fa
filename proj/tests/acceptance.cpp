#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "meshperm/bijections.hpp"
#include "meshperm/catalog.hpp"
#include "meshperm/checks.hpp"
#include "meshperm/closed_forms.hpp"
#include "meshperm/mesh.hpp"

using namespace meshperm;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome from(const CheckLine& line) { return {line.pass, line.detail}; }

Outcome both(const Outcome& a, const Outcome& b) {
  return {a.pass && b.pass, a.detail + "; " + b.detail};
}

int failures = 0;

void criterion(int number, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s  #%-2d %s: %s [%.1f ms]\n", o.pass ? "PASS" : "FAIL", number, title,
              o.detail.c_str(), ms);
  std::fflush(stdout);
}

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace

int main() {
  const auto& catalog = builtin_catalog();
  TableCache cache(catalog, DistributionOptions{1, default_capacity()});

  criterion(1, "worked example", [] {
    const MeshPattern p = MeshPattern::parse("123|0,0;1,2;2,1;3,1");
    const auto start = std::chrono::steady_clock::now();
    const auto a = count_occurrences(Permutation::parse("23154"), p);
    const auto b = count_occurrences(Permutation::parse("14325"), p);
    const auto c = count_occurrences(Permutation::parse("14325"), MeshPattern::parse("123|"));
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return Outcome{a == 2 && b == 0 && c == 3 && ms < 1.0,
                   "counts " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                       std::to_string(c) + " (want 2, 0, 3), " + std::to_string(ms) + " ms"};
  });

  criterion(2, "joint symmetry of the 56 proven pairs, 2<=n<=7", [&] {
    int proven = 0;
    for (const PatternPair& p : catalog) {
      if (p.status != Status::proven) continue;
      ++proven;
      for (int n = 2; n <= 7; ++n) {
        if (!is_jointly_symmetric(cache.get(p.id, n))) {
          return Outcome{false, p.id + " asymmetric at n=" + std::to_string(n)};
        }
      }
    }
    return Outcome{proven == 56, std::to_string(proven) + " pairs symmetric"};
  });

  criterion(3, "conjectured pairs S21, S22, n<=7", [&] {
    for (const char* id : {"S21", "S22"}) {
      for (int n = 2; n <= 7; ++n) {
        if (!is_jointly_symmetric(cache.get(id, n))) {
          return Outcome{false, std::string(id) + ": conjecture fails at n=" + std::to_string(n)};
        }
      }
    }
    return Outcome{true, "conjecture holds at n<=7 for S21 and S22"};
  });

  criterion(4, "frame equality, n<=6", [&] {
    const auto groups = frames(catalog);
    for (const auto& frame : groups) {
      for (int n = 2; n <= 6; ++n) {
        for (const PatternPair* m : frame) {
          if (cache.get(m->id, n) != cache.get(frame.front()->id, n)) {
            return Outcome{false, m->id + " differs from " + frame.front()->id + " at n=" +
                                      std::to_string(n)};
          }
        }
      }
    }
    return Outcome{true, std::to_string(groups.size()) + " frames, members identical"};
  });

  criterion(5, "split recurrence for S19/S20", [&] { return from(check_thm21(cache, 7, 6)); });

  criterion(6, "Stirling distribution of the length-2 patterns, n<=8",
            [&] { return from(check_lemma31(8, cache.limit())); });

  criterion(7, "closed form for A17 and the harmonic sequence", [&] {
    return both(both(from(check_thm32(cache, 7)), from(check_thm32_convolution(7))),
                from(check_harmonic(6)));
  });

  criterion(8, "position-of-n recurrence for A25..A32",
            [&] { return from(check_thm33(cache, 7, 6)); });

  criterion(9, "polynomial recurrence for A33", [&] {
    return both(from(check_thm34(cache, 7)), from(check_thm34_coefficients(9)));
  });

  criterion(10, "common marginal of A25..A36", [&] { return from(check_cor35(cache, 7)); });

  criterion(11, "inversion sequences, n<=8", [&] { return from(check_thm36(8, cache.limit())); });

  criterion(12, "bijection harnesses", [&] {
    std::string detail;
    for (const char* id : {"S9", "S11", "S13", "S15", "S17"}) {
      const PatternPair& p = find_pair(catalog, id);
      for (int n = 1; n <= 6; ++n) {
        const BijectionReport r = verify_swap_bijection(*default_map_for(p), n, p);
        if (!r.pass) {
          return Outcome{false, std::string(id) + " n=" + std::to_string(n) + ": " +
                                    r.counterexample.value_or("")};
        }
      }
    }
    detail = "S9..S17 involutions swap (k,l) for n<=6";
    const PatternPair& s21 = find_pair(catalog, "S21");
    bool ok = true;
    std::string counts;
    std::string first_failure;
    for (int n = 1; n <= 7; ++n) {
      const BijectionReport r = verify_swap_bijection(SwapMap::s21, n, s21);
      std::int64_t q1 = 0;
      std::int64_t q2 = 0;
      std::int64_t swaps = 0;
      for (const auto& [key, value] : r.stats) {
        if (key == "avoiders_q1") q1 = value;
        if (key == "avoiders_q2") q2 = value;
        if (key == "max_swaps") swaps = value;
      }
      counts += (counts.empty() ? "" : ",") + std::to_string(q1) +
                (q1 == q2 ? "" : "!=" + std::to_string(q2));
      if (swaps > binomial(n, 3)) ok = false;
      if (!r.pass && first_failure.empty()) {
        first_failure = "n=" + std::to_string(n) + ": " + r.counterexample.value_or("");
      }
      ok = ok && r.pass;
    }
    detail += "; |S_n(q1)| = |S_n(q2)| = " + counts + " for n=1..7";
    if (!ok) detail += "; iterated swap is not injective, " + first_failure;
    return Outcome{ok, detail};
  });

  criterion(13, "symmetry chains", [&] {
    const DerivationReport r = validate_symmetry_derivations(catalog);
    for (const ChainResult& c : r.chains) {
      if (!c.pass) return Outcome{false, c.name + ": " + c.detail};
    }
    return Outcome{true, std::to_string(r.chains.size()) + " chains and pair relations close"};
  });

  criterion(14, "equivariance under complement, reverse, inverse", [&] {
    std::mt19937 rng(20240613);
    const int samples = 12000;
    for (int s = 0; s < samples; ++s) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const Permutation pi = random_permutation(n, rng);
      const PatternPair& p = catalog[rng() % catalog.size()];
      const MeshPattern& q = rng() % 2 ? p.q1 : p.q2;
      const auto base = count_occurrences(pi, q);
      if (count_occurrences(complement(pi), complement_pattern(q)) != base ||
          count_occurrences(reverse(pi), reverse_pattern(q)) != base ||
          count_occurrences(inverse(pi), inverse_pattern(q)) != base) {
        return Outcome{false, "fails for " + pi.to_string() + " and " + q.to_string()};
      }
    }
    return Outcome{true, std::to_string(samples) + " samples, 0 failures"};
  });

  criterion(15, "Chu-Vandermonde, n<=10", [] { return from(check_chu_vandermonde(10)); });

  std::printf("%d of 15 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
