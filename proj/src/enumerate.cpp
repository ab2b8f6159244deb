#include "rotorlab/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "rotorlab/classify.hpp"

namespace rotorlab {

namespace {

bool primitive(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (int i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return false;
  }
  return true;
}

}  // namespace

std::vector<int> binary_word(int n, std::uint64_t index) {
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  for (int j = 1; j < n; ++j)
    w[static_cast<std::size_t>(j)] = 1 + ((index >> (n - 1 - j)) & 1u);
  return w;
}

void for_each_binary_word(int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 1 || n > 62) throw std::invalid_argument("binary words: length out of range");
  const std::uint64_t total = 1ull << (n - 1);
  for (std::uint64_t i = 0; i < total; ++i) fn(binary_word(n, i));
}

std::vector<RotorType> all_two_state_rotors(int n) {
  std::vector<RotorType> out;
  for_each_binary_word(n, [&](const std::vector<int>& w) {
    if (primitive(w) && std::find(w.begin(), w.end(), 2) != w.end())
      out.push_back(RotorType::canonicalize(w));
  });
  return out;
}

std::vector<RotorType> all_balanced_rotors(int n) {
  std::vector<RotorType> out;
  if (n % 2 != 0) return out;
  for (auto& r : all_two_state_rotors(n))
    if (is_balanced(r)) out.push_back(std::move(r));
  return out;
}

std::vector<RotorType> all_abba_rotors(int n) {
  std::vector<RotorType> out;
  if (n % 2 != 0) return out;
  for (auto& r : all_two_state_rotors(n))
    if (is_abba(r)) out.push_back(std::move(r));
  return out;
}

std::vector<RotorType> all_canonical_rotors(int n, int min_states, int max_states) {
  std::vector<RotorType> out;
  std::vector<int> w(static_cast<std::size_t>(n));
  // First-appearance labelings: each symbol is at most one more than the
  // maximum seen so far, and the first symbol is 1.
  auto rec = [&](auto&& self, int pos, int seen) -> void {
    if (pos == n) {
      if (seen >= min_states && primitive(w)) out.push_back(RotorType::canonicalize(w));
      return;
    }
    const int limit = std::min(seen + 1, max_states);
    for (int s = 1; s <= limit; ++s) {
      w[static_cast<std::size_t>(pos)] = s;
      self(self, pos + 1, std::max(seen, s));
    }
  };
  if (n >= 1) {
    w[0] = 1;
    rec(rec, 1, 1);
  }
  return out;
}

}  // namespace rotorlab
