#include "rotorlab/decompose.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "rotorlab/classify.hpp"

namespace rotorlab {

namespace {

void require_balanced(const RotorType& r) {
  if (!is_balanced(r))
    throw std::invalid_argument("run decomposition: rotor is not balanced");
}

// Interior positions p in (0, n) where the prefix sum (1 -> +1, 2 -> -1)
// vanishes. Every balanced cut point is one of these.
std::vector<int> interior_zeros(std::span<const int> word) {
  std::vector<int> zeros;
  int sum = 0;
  for (int i = 0; i + 1 < static_cast<int>(word.size()); ++i) {
    sum += word[i] == 1 ? 1 : -1;
    if (sum == 0) zeros.push_back(i + 1);
  }
  return zeros;
}

RunDecomposition decomposition_from_boundaries(const std::vector<int>& bounds, int n,
                                               RunDecomposition::Kind kind) {
  RunDecomposition d;
  d.kind = kind;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const int start = bounds[i];
    const int end = i + 1 < bounds.size() ? bounds[i + 1] : n;
    const int len = end - start;
    d.runs.emplace_back(start, len);
    d.type_sequence.push_back(kind == RunDecomposition::Kind::balanced ? len / 2 : len);
  }
  return d;
}

bool half_run_uniform(std::span<const int> word, int start, int len) {
  const int n = static_cast<int>(word.size());
  for (int j = 1; j < len; ++j)
    if (word[(start + j) % n] != word[start % n]) return false;
  return true;
}

// Positional criterion for one balanced decomposition: every run, in both
// copies over a doubled period, must shadow a uniform run at half its
// offset and half its length.
bool positional_for(const std::vector<int>& bounds, std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const int start = bounds[i];
    const int end = i + 1 < bounds.size() ? bounds[i + 1] : n;
    const int half = (end - start) / 2;
    if (!half_run_uniform(word, start / 2, half)) return false;
    if (!half_run_uniform(word, (n + start) / 2, half)) return false;
  }
  return true;
}

RunDecomposition positional_urd(const std::vector<int>& bounds, int n) {
  // Halved runs of the two period copies tile [0, n) exactly.
  RunDecomposition d;
  d.kind = RunDecomposition::Kind::uniform;
  for (int copy = 0; copy < 2; ++copy) {
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      const int start = bounds[i];
      const int end = i + 1 < bounds.size() ? bounds[i + 1] : n;
      d.runs.emplace_back((copy * n + start) / 2, (end - start) / 2);
      d.type_sequence.push_back((end - start) / 2);
    }
  }
  return d;
}

// Canonical form of a type sequence viewed cyclically: fundamental period
// first, then the lexicographically smallest rotation.
std::vector<int> cyclic_type_normal(std::vector<int> t) {
  const int n = static_cast<int>(t.size());
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (int i = d; i < n && periodic; ++i) periodic = t[i] == t[i - d];
    if (periodic) {
      t.resize(static_cast<std::size_t>(d));
      break;
    }
  }
  const int m = static_cast<int>(t.size());
  std::vector<int> best = t;
  for (int s = 1; s < m; ++s) {
    std::vector<int> rot(t.size());
    for (int i = 0; i < m; ++i) rot[i] = t[(s + i) % m];
    if (rot < best) best = rot;
  }
  return best;
}

template <typename Fn>
void for_each_brd_boundaries(std::span<const int> word, Fn&& fn) {
  const auto zeros = interior_zeros(word);
  const std::size_t k = zeros.size();
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    std::vector<int> bounds{0};
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ull << i)) bounds.push_back(zeros[i]);
    fn(bounds);
  }
}

template <typename Fn>
void for_each_urd_boundaries(std::span<const int> word, Fn&& fn) {
  const int n = static_cast<int>(word.size());
  std::vector<int> optional_cuts;
  for (int i = 1; i < n; ++i)
    if (word[i] == word[i - 1]) optional_cuts.push_back(i);
  const std::size_t k = optional_cuts.size();
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    std::vector<int> bounds;
    std::size_t next = 0;
    for (int i = 0; i < n; ++i) {
      const bool mandatory = i == 0 || word[i] != word[i - 1];
      const bool chosen = next < k && optional_cuts[next] == i && (mask & (1ull << next));
      if (next < k && optional_cuts[next] == i) ++next;
      if (mandatory || chosen) bounds.push_back(i);
    }
    fn(bounds);
  }
}

}  // namespace

RunDecomposition maximal_brd(const RotorType& r) {
  require_balanced(r);
  const auto& w = r.symbols();
  std::vector<int> bounds{0};
  for (int z : interior_zeros(w)) bounds.push_back(z);
  return decomposition_from_boundaries(bounds, r.period(), RunDecomposition::Kind::balanced);
}

Rational balance_coefficient(const RotorType& r) {
  require_balanced(r);
  return balance_coefficient_word(r.symbols());
}

Rational balance_coefficient_word(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  int sum = 0;
  int zeros = 0;
  for (int i = 0; i < n; ++i) {
    if (word[i] != 1 && word[i] != 2)
      throw std::invalid_argument("balance coefficient: word must be two-state");
    sum += word[i] == 1 ? 1 : -1;
    if (sum == 0) ++zeros;
  }
  if (sum != 0) throw std::invalid_argument("balance coefficient: word is not balanced");
  return Rational(zeros, n);
}

BurdResult burd_check(const RotorType& r) {
  require_balanced(r);
  const auto& w = r.symbols();
  const int n = r.period();

  BurdResult result;
  for_each_brd_boundaries(w, [&](const std::vector<int>& bounds) {
    if (result.verdict == BurdVerdict::positional) return;
    if (positional_for(bounds, w)) {
      result.verdict = BurdVerdict::positional;
      result.brd = decomposition_from_boundaries(bounds, n, RunDecomposition::Kind::balanced);
      result.urd = positional_urd(bounds, n);
    }
  });
  if (result.verdict == BurdVerdict::positional) return result;

  std::set<std::vector<int>> urd_types;
  std::map<std::vector<int>, std::vector<int>> urd_witness;
  for_each_urd_boundaries(w, [&](const std::vector<int>& bounds) {
    auto d = decomposition_from_boundaries(bounds, n, RunDecomposition::Kind::uniform);
    auto key = cyclic_type_normal(d.type_sequence);
    if (urd_types.insert(key).second) urd_witness.emplace(key, bounds);
  });
  for_each_brd_boundaries(w, [&](const std::vector<int>& bounds) {
    if (result.verdict != BurdVerdict::not_burd) return;
    auto d = decomposition_from_boundaries(bounds, n, RunDecomposition::Kind::balanced);
    auto key = cyclic_type_normal(d.type_sequence);
    auto it = urd_witness.find(key);
    if (it != urd_witness.end()) {
      result.verdict = BurdVerdict::type_only;
      result.brd = std::move(d);
      result.urd =
          decomposition_from_boundaries(it->second, n, RunDecomposition::Kind::uniform);
    }
  });
  return result;
}

Rational ba_frequency(const RotorType& r) {
  if (!is_abba(r))
    throw std::invalid_argument("ba-frequency: rotor is not ab-ba");
  return ba_frequency_word(r.symbols());
}

Rational ba_frequency_word(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  if (n % 2 != 0) throw std::invalid_argument("ba-frequency: odd length");
  int reversed = 0;
  for (int i = 0; i < n; i += 2) {
    const int a = word[i];
    const int b = word[i + 1];
    if (a == b || a < 1 || a > 2 || b < 1 || b > 2)
      throw std::invalid_argument("ba-frequency: word is not ab-ba");
    if (a == 2) ++reversed;
  }
  return Rational(2 * reversed, n);
}

}  // namespace rotorlab
