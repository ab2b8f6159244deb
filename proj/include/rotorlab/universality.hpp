#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotorlab/compressor.hpp"
#include "rotorlab/rotor.hpp"

namespace rotorlab {

// Default master seed; override with --seed or ROTORLAB_SEED.
inline constexpr std::uint64_t kDefaultSeed = 0x726f746f726c6162ull;

struct AlgoConfig {
  int max_apps = 200;      // applications per random sequence
  int max_restarts = 50;   // extra sequences after the first
  std::uint64_t master_seed = kDefaultSeed;
};

struct TrajectoryStep {
  CompressorVariant variant;
  std::vector<int> raw;  // window word of this application
  RotorType rotor;       // canonical result
};

// A run of the compressor algorithm: the rotor is balanced after the
// opening ud, never grows afterwards, and the verdict is universal exactly
// when some step reaches the two-term alternating rotor. Replaying the
// steps through the network simulator reproduces the certificate.
struct CompressorTrajectory {
  RotorType start;
  std::vector<TrajectoryStep> steps;
  enum class Outcome { universal, undecided } outcome = Outcome::undecided;
  std::uint64_t rng_seed = 0;  // per-rotor stream seed actually used
  int attempts_used = 0;
  std::int64_t applications_used = 0;
};

// Stream seed derived from the master seed and the canonical literal, so
// enumeration verdicts do not depend on scheduling.
std::uint64_t per_rotor_seed(std::uint64_t master_seed, const std::string& literal);

// Applies ud once, then up to max_apps uniformly random variants, restarting
// from the post-ud rotor up to max_restarts times; stops the moment the
// canonical rotor reaches 12. Deterministic given the seed. Refuses trivial
// rotors, rotors with more than two states, and boppy rotors (their
// structure is conserved by every network, so they cannot be universal).
CompressorTrajectory compressor_algorithm(const RotorType& r, const AlgoConfig& cfg = {});

struct TableRow {
  int length = 0;
  std::uint64_t total_words = 0;  // 2^(n-1)
  std::uint64_t trivial_count = 0;
  std::uint64_t boppy_count = 0;
  std::uint64_t unboppy_count = 0;
  std::uint64_t undecided_count = 0;
  std::vector<std::string> undecided;  // length-n literals, lexicographic
  double fraction_total() const {
    return static_cast<double>(undecided_count) / static_cast<double>(total_words);
  }
  double fraction_unboppy() const {
    return unboppy_count == 0
               ? 0.0
               : static_cast<double>(undecided_count) / static_cast<double>(unboppy_count);
  }
};

// Classifies every two-state word of length n starting with 1 and runs the
// compressor algorithm on each unboppy one (via its canonical rotor, whose
// literal also keys the rng stream, so equivalent words agree). Work is
// spread over a worker pool; the row is identical for any worker count.
TableRow enumerate_table(int n, const AlgoConfig& cfg = {}, int workers = 0);

// Undecided counts previously reported for lengths 2..17; used by
// --expect table1 as upper bounds with equality expected.
const std::vector<std::pair<int, std::uint64_t>>& reference_undecided_counts();

enum class FamilyKind { ones_then_two, double_ones, sandwich };

RotorType family_rotor(FamilyKind kind, int k, int l = 0);

struct FamilyVerdict {
  std::string description;
  RotorType rotor;
  bool boppy_excluded = false;
  bool universal = false;
};

std::vector<FamilyVerdict> check_family(FamilyKind kind, int k_max, int l_max,
                                        const AlgoConfig& cfg = {});

// Deterministic certificate for an ab-ba rotor with at least two plain
// blocks and exactly one reversed block: greedy uu/dd choices walk the
// reversed block to the front and then erase it. No randomness involved.
CompressorTrajectory one21_verdict(const RotorType& r);

// The two-block transforms on 0/1 sequences (0 for a plain block, 1 for a
// reversed one): uu sends a_i to a_{2i - a_i} and dd to a_{2i - 1 + a_i},
// indices 1-based modulo the length.
std::vector<std::uint8_t> zero_one_transform(const std::vector<std::uint8_t>& a,
                                             CompressorVariant v);

struct AbbaSurveyResult {
  int max_length = 0;
  std::uint64_t checked = 0;
  std::vector<RotorType> failures;
};

// Runs the compressor algorithm over every ab-ba rotor whose period is
// congruent to 2 mod 4, up to max_length.
AbbaSurveyResult abba_survey(int max_length, const AlgoConfig& cfg = {});

}  // namespace rotorlab
