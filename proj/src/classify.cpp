#include "rotorlab/classify.hpp"

#include <algorithm>
#include <numeric>

namespace rotorlab {

bool is_palindromic_word(std::span<const int> word) {
  return std::equal(word.begin(), word.end(), word.rbegin());
}

bool blocks_uniform(std::span<const int> word, int m) {
  const int n = static_cast<int>(word.size());
  if (m < 1 || n % m != 0) return false;
  for (int start = 0; start < n; start += m)
    for (int j = 1; j < m; ++j)
      if (word[start + j] != word[start]) return false;
  return true;
}

namespace {

bool block_counts_balanced(std::span<const int> word, int n) {
  // Aligned n-blocks of one period; callers guarantee n divides the size.
  const int len = static_cast<int>(word.size());
  for (int start = 0; start < len; start += n) {
    int ones = 0;
    for (int j = 0; j < n; ++j) ones += word[start + j] == 1;
    if (2 * ones != n) return false;
  }
  return true;
}

}  // namespace

Classification classify(const RotorType& r) {
  const auto& w = r.symbols();
  const int n = r.period();

  Classification c;
  c.palindromic = is_palindromic_word(w);
  for (int m = n; m >= 2; --m) {
    if (n % m == 0 && blocks_uniform(w, m)) {
      c.max_block_length = m;
      break;
    }
  }
  c.boppy = c.palindromic || c.max_block_length >= 2;

  if (r.state_count() == 2) {
    for (int d = 1; d <= n; ++d)
      if (n % d == 0 && block_counts_balanced(w, d)) c.n_balance_degrees.push_back(d);
    c.balanced = !c.n_balance_degrees.empty() &&
                 c.n_balance_degrees.back() == n;
    c.abba = std::find(c.n_balance_degrees.begin(), c.n_balance_degrees.end(), 2) !=
             c.n_balance_degrees.end();
  }
  return c;
}

std::string class_label(const Classification& c) {
  return "C(" + std::string(c.palindromic ? "1" : "0") + "," +
         std::to_string(c.max_block_length) + ")";
}

bool is_balanced(const RotorType& r) {
  if (r.state_count() != 2) return false;
  const auto& w = r.symbols();
  const auto ones = std::count(w.begin(), w.end(), 1);
  return 2 * ones == r.period();
}

bool is_abba(const RotorType& r) {
  if (r.state_count() != 2 || r.period() % 2 != 0) return false;
  const auto& w = r.symbols();
  for (int i = 0; i < r.period(); i += 2)
    if (w[i] == w[i + 1]) return false;
  return true;
}

bool is_block_balanced(const RotorType& r, int n) {
  if (r.state_count() != 2 || n % 2 != 0) return false;
  const std::int64_t span = std::lcm<std::int64_t>(r.period(), n);
  for (std::int64_t start = 0; start < span; start += n) {
    int ones = 0;
    for (int j = 0; j < n; ++j)
      ones += r.at(static_cast<int>((start + j) % r.period())) == 1;
    if (2 * ones != n) return false;
  }
  return true;
}

}  // namespace rotorlab
