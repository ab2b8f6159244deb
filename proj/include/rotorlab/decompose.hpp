#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rotorlab/rational.hpp"
#include "rotorlab/rotor.hpp"

namespace rotorlab {

// A partition of one period into contiguous runs, tiling [0, |r|) from
// offset 0. Balanced decompositions cut a balanced two-state rotor into
// runs with equal state counts; the type sequence lists the half-lengths.
// Uniform decompositions cut into constant runs; the type lists lengths.
struct RunDecomposition {
  enum class Kind { balanced, uniform };
  Kind kind = Kind::balanced;
  std::vector<std::pair<int, int>> runs;  // (start, length)
  std::vector<int> type_sequence;
};

// The finest balanced decomposition: cut wherever the +1/-1 prefix sum
// returns to zero. Every balanced decomposition coarsens this one, so its
// run count is maximal. Requires a balanced two-state rotor.
RunDecomposition maximal_brd(const RotorType& r);

// Maximal balanced run count divided by the period.
Rational balance_coefficient(const RotorType& r);
Rational balance_coefficient_word(std::span<const int> word);

enum class BurdVerdict { not_burd, type_only, positional };

struct BurdResult {
  BurdVerdict verdict = BurdVerdict::not_burd;
  std::optional<RunDecomposition> brd;
  std::optional<RunDecomposition> urd;
};

// Searches all balanced decompositions for one whose run starting at 2a
// with half-length b shadows a uniform run of length b starting at a, in
// both halves of a doubled period (positional). Failing that, looks for a
// balanced and a uniform decomposition whose type sequences agree as
// cyclic sequences (type_only). Exhaustive; periods stay small.
BurdResult burd_check(const RotorType& r);

// Fraction of reversed two-state blocks: 2k/|r| where k counts the 21
// blocks among the |r|/2 two-blocks. Requires an ab-ba rotor.
Rational ba_frequency(const RotorType& r);
Rational ba_frequency_word(std::span<const int> word);

}  // namespace rotorlab
