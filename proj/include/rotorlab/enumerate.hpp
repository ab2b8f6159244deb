#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rotorlab/rotor.hpp"

namespace rotorlab {

// Visits all 2^(n-1) two-state words of length n that start with 1, in
// lexicographic order. Words are over {1, 2} and are not necessarily
// primitive; index i maps to the word whose bits, read left to right from
// the most significant of the n-1 free positions, choose symbol 2.
void for_each_binary_word(int n, const std::function<void(const std::vector<int>&)>& fn);
std::vector<int> binary_word(int n, std::uint64_t index);

// Canonical (primitive, first-appearance labeled) rotors of period exactly n.
std::vector<RotorType> all_two_state_rotors(int n);
std::vector<RotorType> all_balanced_rotors(int n);
std::vector<RotorType> all_abba_rotors(int n);

// Canonical rotors of period exactly n whose state count lies in
// [min_states, max_states]. Enumerates first-appearance labelings directly.
std::vector<RotorType> all_canonical_rotors(int n, int min_states, int max_states);

}  // namespace rotorlab
