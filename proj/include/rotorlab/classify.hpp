#pragma once

#include <span>
#include <string>
#include <vector>

#include "rotorlab/rotor.hpp"

namespace rotorlab {

// Structural classification of a rotor type. A rotor is block-repetitive
// when its period splits into aligned uniform blocks of some common length
// m >= 2; max_block_length records the largest such m (1 when none exists,
// counting the trivial single-symbol blocks). Boppy rotors, the palindromic
// or block-repetitive ones, can never be universal because both properties
// are conserved by every homogeneous network.
struct Classification {
  bool palindromic = false;
  int max_block_length = 1;
  bool boppy = false;
  bool balanced = false;                 // two states, equal overall counts
  std::vector<int> n_balance_degrees;    // n dividing |r| with every n-block balanced
  bool abba = false;                     // 2 is a balance degree
};

Classification classify(const RotorType& r);

// The "C(p,b)" class label: p = 1 iff palindromic, b = max block length.
std::string class_label(const Classification& c);

bool is_palindromic_word(std::span<const int> word);
bool blocks_uniform(std::span<const int> word, int m);

bool is_balanced(const RotorType& r);
bool is_abba(const RotorType& r);

// Whether every aligned length-n block of the infinite periodic sequence is
// balanced. Unlike a balance degree this does not ask n to divide the
// period, so it survives period collapse under the compressor maps.
bool is_block_balanced(const RotorType& r, int n);

}  // namespace rotorlab
