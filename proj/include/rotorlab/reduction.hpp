#pragma once

#include <string>
#include <vector>

#include "rotorlab/rotor.hpp"

namespace rotorlab {

// A reduction specializes a rotor: merging redirects every firing of one
// state along another state's edge, deletion turns a state's edges into
// self-loops and drops its firings from the schedule.
struct ReductionRule {
  enum class Kind { merge, erase };
  Kind kind = Kind::merge;
  int source = 0;
  int target = 0;  // unused for erase

  static ReductionRule merge(int source, int target) {
    return {Kind::merge, source, target};
  }
  static ReductionRule erase(int state) { return {Kind::erase, state, 0}; }

  std::string str() const;
  friend bool operator==(const ReductionRule&, const ReductionRule&) = default;
};

// Applies a rule and re-canonicalizes. Rules name states as they appear in
// the given word, which need not be canonical. Throws std::invalid_argument
// when a named state does not occur, when a merge maps a state to itself,
// or when a deletion would empty the rotor. A one-state result is allowed;
// callers detect it through RotorType::trivial().
RotorType apply_reduction(std::span<const int> word, const ReductionRule& rule);
RotorType apply_reduction(const RotorType& r, const ReductionRule& rule);

// All distinct reductions in a fixed deterministic order: merges of the
// higher state into the lower, sorted lexicographically by
// (source, target), then deletions by ascending state.
std::vector<ReductionRule> enumerate_reductions(std::span<const int> word);
std::vector<ReductionRule> enumerate_reductions(const RotorType& r);

struct UnboppyReduction {
  ReductionRule rule;
  RotorType result;
};

// Brute-forces enumerate_reductions and returns the first rule whose result
// is unboppy. Requires an unboppy rotor with at least three states; throws
// std::logic_error if no reduction qualifies (which would contradict the
// reduction guarantee and must never happen).
UnboppyReduction find_unboppy_reduction(std::span<const int> word);
UnboppyReduction find_unboppy_reduction(const RotorType& r);

}  // namespace rotorlab
