// Test-only reference implementations, kept independent of the library
// paths they check: definitional predicates restated from first principles
// and brute-force searches with no shared helpers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rotorlab/network.hpp"

namespace oracles {

// Same rotor pattern: some label bijection turns one infinite periodic
// sequence into the other, compared over the lcm of the periods.
inline bool definitional_equivalent(const std::vector<int>& a, const std::vector<int>& b) {
  const std::int64_t span = std::lcm<std::int64_t>(
      static_cast<std::int64_t>(a.size()), static_cast<std::int64_t>(b.size()));
  std::map<int, int> fwd, rev;
  for (std::int64_t i = 0; i < span; ++i) {
    const int x = a[static_cast<std::size_t>(i % a.size())];
    const int y = b[static_cast<std::size_t>(i % b.size())];
    auto f = fwd.emplace(x, y);
    if (!f.second && f.first->second != y) return false;
    auto r = rev.emplace(y, x);
    if (!r.second && r.first->second != x) return false;
  }
  return true;
}

// Palindromic or block-repetitive, restated directly.
inline bool definitional_boppy(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  bool palindromic = true;
  for (int k = 0; k < n; ++k)
    if (w[static_cast<std::size_t>(k)] != w[static_cast<std::size_t>(n - 1 - k)])
      palindromic = false;
  if (palindromic) return true;
  for (int m = 2; m <= n; ++m) {
    if (n % m != 0) continue;
    bool repetitive = true;
    for (int start = 0; start < n && repetitive; start += m)
      for (int j = 1; j < m && repetitive; ++j)
        repetitive = w[static_cast<std::size_t>(start + j)] ==
                     w[static_cast<std::size_t>(start)];
    if (repetitive) return true;
  }
  return false;
}

// Largest number of parts over all ways to cut one period into contiguous
// balanced pieces, by direct recursion on the first cut.
inline int brute_force_max_balanced_runs(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> memo(static_cast<std::size_t>(n) + 1, -2);
  auto best_from = [&](auto&& self, int start) -> int {
    if (start == n) return 0;
    int& m = memo[static_cast<std::size_t>(start)];
    if (m != -2) return m;
    m = -1;
    int ones = 0, twos = 0;
    for (int end = start + 1; end <= n; ++end) {
      (w[static_cast<std::size_t>(end - 1)] == 1 ? ones : twos) += 1;
      if (ones != twos) continue;
      const int rest = self(self, end);
      if (rest >= 0) m = std::max(m, 1 + rest);
    }
    return m;
  };
  return best_from(best_from, 0);
}

// Definitional n-equivalence: try every bijection between the label sets.
inline bool definitional_n_equivalent(const std::vector<int>& a, const std::vector<int>& b,
                                      int n) {
  std::vector<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
  std::sort(sb.begin(), sb.end());
  sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
  if (sa.size() != sb.size()) return false;

  const std::int64_t base = std::lcm<std::int64_t>(
      static_cast<std::int64_t>(a.size()), static_cast<std::int64_t>(b.size()));
  const std::int64_t span = std::lcm<std::int64_t>(base, n);
  std::sort(sb.begin(), sb.end());
  do {
    std::map<int, int> phi;
    for (std::size_t i = 0; i < sa.size(); ++i) phi[sa[i]] = sb[i];
    bool ok = true;
    for (std::int64_t block = 0; block * n < span && ok; ++block) {
      std::vector<int> left, right;
      for (int j = 0; j < n; ++j) {
        const std::int64_t pos = block * n + j;
        left.push_back(phi[a[static_cast<std::size_t>(pos % a.size())]]);
        right.push_back(b[static_cast<std::size_t>(pos % b.size())]);
      }
      std::sort(left.begin(), left.end());
      std::sort(right.begin(), right.end());
      ok = left == right;
    }
    if (ok) return true;
  } while (std::next_permutation(sb.begin(), sb.end()));
  return false;
}

// Seeded random networks that satisfy the construction invariants: layered
// vertices with occasional back edges to the source keep every cycle
// through the source out of the way of termination.
struct RandomNetworkOptions {
  int max_non_targets = 6;
  int max_targets = 3;
  int max_out_degree = 3;
  int max_pattern_length = 4;
  bool palindromic_patterns = false;
  int uniform_block_length = 0;  // >0 forces block-repetitive patterns
};

inline rotorlab::Network random_network(std::mt19937_64& rng,
                                        const RandomNetworkOptions& opt) {
  for (;;) {
    const int non_targets = 1 + static_cast<int>(rng() % opt.max_non_targets);
    const int targets = 1 + static_cast<int>(rng() % opt.max_targets);
    const int total = non_targets + targets;
    std::map<int, std::vector<int>> edges;
    std::map<int, std::vector<int>> patterns;
    for (int v = 1; v <= non_targets; ++v) {
      const int degree = 1 + static_cast<int>(rng() % opt.max_out_degree);
      std::vector<int> out;
      for (int e = 0; e < degree; ++e) out.push_back(1 + static_cast<int>(rng() % total));

      std::vector<int> pat;
      if (opt.uniform_block_length > 0) {
        const int blocks = 1 + static_cast<int>(rng() % 3);
        for (int b = 0; b < blocks; ++b) {
          const int s = 1 + static_cast<int>(rng() % degree);
          for (int j = 0; j < opt.uniform_block_length; ++j) pat.push_back(s);
        }
      } else {
        const int len = 1 + static_cast<int>(rng() % opt.max_pattern_length);
        for (int j = 0; j < len; ++j) pat.push_back(1 + static_cast<int>(rng() % degree));
        if (opt.palindromic_patterns) {
          std::vector<int> mirrored(pat.begin(), pat.end());
          for (int j = len - 2; j >= 0; --j) mirrored.push_back(pat[static_cast<std::size_t>(j)]);
          pat = std::move(mirrored);
        }
      }
      edges.emplace(v, std::move(out));
      patterns.emplace(v, std::move(pat));
    }
    std::vector<int> target_ids;
    for (int v = non_targets + 1; v <= total; ++v) target_ids.push_back(v);
    try {
      return rotorlab::Network(total, 1, target_ids, std::move(edges), std::move(patterns));
    } catch (const std::invalid_argument&) {
      continue;  // reachability or degree rejected; redraw
    }
  }
}

}  // namespace oracles
