#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotorlab/decompose.hpp"
#include "rotorlab/network.hpp"
#include "rotorlab/rational.hpp"
#include "rotorlab/rotor.hpp"

namespace rotorlab {

// The three-rotor, two-target network on a two-state rotor r, in its four
// orientations, plus the undeleted binary tree bt. Letters give the first
// firing direction of the left and right rotor: u back to the source, d to
// the rotor's target.
enum class CompressorVariant { uu, ud, du, dd, bt };

const char* variant_name(CompressorVariant v);
CompressorVariant parse_variant(const std::string& name);

struct CompressResult {
  // Exactly the hits fired while the network state returns to its start:
  // |r| hits over {4,5} for balanced input, one per source period
  // otherwise; for bt the targets are {1,2,3,4} and every firing hits.
  std::vector<int> raw;
  // raw with 4 -> 1 and 5 -> 2, keeping the left/right target identities.
  // The ba-frequency bookkeeping lives on this word; first-appearance
  // relabeling would flip it. Empty for bt.
  std::vector<int> oriented;
  RotorType canonical;  // raw canonicalized, fundamental period extracted
};

// Direct array-walk evaluation of the compressor maps. Each source firing
// routes to the left rotor on state 1 and the right rotor on state 2; a
// routed rotor fires its next term, emitting a hit when that term points
// down. The walk bookkeeping never reorders hits, so the emission stream
// is the hitting sequence. Requires a two-state rotor.
CompressResult apply_compressor(const RotorType& r, CompressorVariant v);

// The same map evaluated by the generic network simulator; the oracle for
// apply_compressor.
Network build_compressor_network(const RotorType& r, CompressorVariant v);

// Occurrence/counting functions of a balanced two-state rotor with period
// 2h, extended periodically: f(m)/g(m) locate the m-th 1/2 (1-based
// positions), F(p)/G(p) count 1s/2s through position p.
class PositionFunctions {
 public:
  explicit PositionFunctions(const RotorType& r);
  std::int64_t f(std::int64_t m) const;
  std::int64_t g(std::int64_t m) const;
  std::int64_t F(std::int64_t p) const;
  std::int64_t G(std::int64_t p) const;
  int half() const { return half_; }

 private:
  int period_ = 0;
  int half_ = 0;
  std::vector<int> pos1_, pos2_;
  std::vector<int> pref1_;
};

// Closed-form position of the m-th 4 in ud(r): F(G(f(g(m)))) + m.
std::int64_t position_of_mth_four_ud(const RotorType& r, std::int64_t m);

struct PalindromeConstraintReport {
  bool ud_palindromic = false;
  bool symmetry_fours = true;   // F(G(f(g(m)))) + F(G(f(g(h-m+1)))) = h
  bool symmetry_fives = true;   // G(F(g(f(m)))) + G(F(g(f(h-m+1)))) = h
  bool starts_ends_same = true;
};

// When ud(r) is palindromic, its m-th and (h-m+1)-th hits of each target
// sit at mirrored positions; this checks the resulting identities and that
// r starts and ends with the same term.
PalindromeConstraintReport check_palindrome_constraints(const RotorType& r);

// How each run of the maximal balanced decomposition, taken over two
// periods, lands in uu(r) and dd(r): the half-offset half-length run of r
// contributes twice its 2-count to uu and twice its 1-count to dd, unless
// it is constant, in which case one side takes the whole doubled length.
struct RunSplit {
  int run_start = 0;       // within the doubled period
  int run_length = 0;      // 2b
  int half_start = 0;      // within one period
  int uu_length = 0;
  int dd_length = 0;
  bool uniform_exception = false;
};

std::vector<RunSplit> split_analysis(const RotorType& r);

struct MonovariantReport {
  Rational b_r, b_uu, b_dd;
  bool inequality_holds = false;  // b(uu) + b(dd) >= 2 b(r)
  bool strict_increase = false;   // one side strictly exceeds b(r)
  bool abba = false;
  Rational m_r, m_uu, m_dd;       // oriented-image ba-frequencies
  bool m_identity_holds = false;  // m(uu) + m(dd) = 2 m(r)
};

MonovariantReport monovariant_report(const RotorType& r);

// All fixed cycles among canonical balanced rotors of the given period:
// sets closed under all four maps in which every member reaches every
// other. Cycles and their members are sorted for stable output.
std::vector<std::vector<RotorType>> fixed_cycle_search(int period);

}  // namespace rotorlab
