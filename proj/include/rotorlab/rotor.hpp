#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rotorlab {

// A rotor type: one fundamental period of a periodic firing schedule over
// small positive integer state labels, kept in canonical form. Canonical
// means the period is primitive (no proper divisor of the length is a
// period) and states are renamed in order of first appearance, so the
// first symbol is always 1. Two label sequences describe the same rotor
// pattern exactly when they canonicalize to the same value.
class RotorType {
 public:
  RotorType() : symbols_{1}, states_(1) {}  // the trivial one-state rotor

  // Extracts the fundamental period and relabels by first appearance.
  // Throws std::invalid_argument on an empty or non-positive sequence.
  static RotorType canonicalize(std::span<const int> raw);

  // Accepts the digit form ("12211122") or the comma form ("4,7,7").
  static RotorType parse(std::string_view text);

  const std::vector<int>& symbols() const { return symbols_; }
  int period() const { return static_cast<int>(symbols_.size()); }
  int state_count() const { return states_; }
  bool trivial() const { return states_ <= 1; }

  int at(int i) const { return symbols_[static_cast<std::size_t>(i)]; }  // 0-based
  // 1-based access with the index taken modulo the period.
  int term(std::int64_t k) const {
    return symbols_[static_cast<std::size_t>((k - 1) % period())];
  }

  std::string str() const;

  auto operator<=>(const RotorType&) const = default;

 private:
  explicit RotorType(std::vector<int> symbols);
  std::vector<int> symbols_;
  int states_ = 0;
};

// Prints digits when every label fits one digit, comma-separated otherwise.
std::string format_word(std::span<const int> word);
std::vector<int> parse_word(std::string_view text);

// Whether two label sequences describe the same rotor pattern.
bool equivalent(std::span<const int> a, std::span<const int> b);

// Coarse blockwise equivalence: some relabeling of a agrees with b on every
// aligned length-n block as a multiset. Periods are compared over their lcm.
bool is_n_equivalent(const RotorType& a, const RotorType& b, int n);

}  // namespace rotorlab
