#include "rotorlab/rotor.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rotorlab {

RotorType::RotorType(std::vector<int> symbols) : symbols_(std::move(symbols)) {
  states_ = *std::max_element(symbols_.begin(), symbols_.end());
}

RotorType RotorType::canonicalize(std::span<const int> raw) {
  if (raw.empty()) throw std::invalid_argument("rotor: empty sequence");
  for (int s : raw)
    if (s <= 0) throw std::invalid_argument("rotor: labels must be positive");

  const int n = static_cast<int>(raw.size());
  int d = n;
  for (int cand = 1; cand < n; ++cand) {
    if (n % cand != 0) continue;
    bool periodic = true;
    for (int i = cand; i < n && periodic; ++i) periodic = raw[i] == raw[i - cand];
    if (periodic) {
      d = cand;
      break;
    }
  }

  std::vector<int> out(raw.begin(), raw.begin() + d);
  std::map<int, int> relabel;
  int next = 1;
  for (int& s : out) {
    auto [it, inserted] = relabel.try_emplace(s, next);
    if (inserted) ++next;
    s = it->second;
  }
  return RotorType(std::move(out));
}

RotorType RotorType::parse(std::string_view text) {
  return canonicalize(parse_word(text));
}

std::string RotorType::str() const { return format_word(symbols_); }

std::string format_word(std::span<const int> word) {
  const bool digits =
      std::all_of(word.begin(), word.end(), [](int s) { return s >= 1 && s <= 9; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (digits) {
      out += static_cast<char>('0' + word[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(word[i]);
    }
  }
  return out;
}

std::vector<int> parse_word(std::string_view text) {
  // Strip surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("rotor literal: empty");

  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view token =
          text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
        token.remove_prefix(1);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
        token.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || value <= 0)
        throw std::invalid_argument("rotor literal: bad token '" + std::string(token) + "'");
      word.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument(std::string("rotor literal: bad digit '") + c + "'");
      word.push_back(c - '0');
    }
  }
  return word;
}

bool equivalent(std::span<const int> a, std::span<const int> b) {
  return RotorType::canonicalize(a) == RotorType::canonicalize(b);
}

bool is_n_equivalent(const RotorType& a, const RotorType& b, int n) {
  if (n < 1) throw std::invalid_argument("n-equivalence: n must be positive");
  const int k = a.state_count();
  if (k != b.state_count()) return false;

  const std::int64_t base = std::lcm<std::int64_t>(a.period(), b.period());
  const std::int64_t span = std::lcm<std::int64_t>(base, n);

  // Try every relabeling of a onto the states of b and compare aligned
  // blocks as multisets, represented by per-state counts.
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (std::int64_t block = 0; block * n < span && ok; ++block) {
      std::vector<int> ca(static_cast<std::size_t>(k), 0);
      std::vector<int> cb(static_cast<std::size_t>(k), 0);
      for (int j = 0; j < n; ++j) {
        const std::int64_t pos = block * n + j;
        const int sa = a.at(static_cast<int>(pos % a.period()));
        const int sb = b.at(static_cast<int>(pos % b.period()));
        ++ca[static_cast<std::size_t>(perm[static_cast<std::size_t>(sa - 1)] - 1)];
        ++cb[static_cast<std::size_t>(sb - 1)];
      }
      ok = ca == cb;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace rotorlab
