#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rotorlab/rotor.hpp"

namespace rotorlab {

struct SimLimits {
  std::uint64_t max_firings = 1'000'000'000ull;
};

// One fundamental period of targets hit, together with the recurrence
// witness that proves the walk's hit stream is purely periodic: the launch
// state seen after prefix_walks walks recurred cycle_walks walks later, and
// the recorded hits repeat with that cycle throughout the observed window.
struct HittingSequence {
  std::vector<int> period;
  std::uint64_t prefix_walks = 0;
  std::uint64_t cycle_walks = 0;
  std::uint64_t firings = 0;
};

// A rotor-router network on a digraph with self-loops and multi-edges.
// Vertices are 1..vertex_count. Targets have outdegree zero; every other
// vertex carries an ordered out-edge list and a firing pattern whose states
// index that list (state s fires out-edge s-1). Patterns are stored as the
// literal sequences given, since relabeling would permute edges.
//
// Construction validates and is pure; walking mutates the per-vertex firing
// counters, so use one instance per thread.
class Network {
 public:
  Network(int vertex_count, int source, std::vector<int> targets,
          std::map<int, std::vector<int>> edges,
          std::map<int, std::vector<int>> patterns);

  static Network from_json_text(const std::string& text);
  std::string to_json_text() const;  // sorted keys, byte-stable

  int vertex_count() const { return vertex_count_; }
  int source() const { return source_; }
  const std::set<int>& targets() const { return targets_; }
  bool is_target(int v) const { return targets_.count(v) > 0; }
  const std::vector<int>& out_edges(int v) const {
    return edges_[static_cast<std::size_t>(v)];
  }
  const std::vector<int>& pattern(int v) const {
    return patterns_[static_cast<std::size_t>(v)];
  }

  // Walks the particle from the source until it reaches a target, advancing
  // every traversed rotor; returns the target hit.
  int walk_once(const SimLimits& limits = {});
  void reset();

  // Extracts one fundamental period of the hit stream starting from the
  // current rotor positions. Walks until a launch state recurs, verifies
  // that the hits observed so far repeat with the cycle length, and reduces
  // the cycle to its fundamental period. Leaves the positions untouched.
  HittingSequence hitting_sequence(const SimLimits& limits = {}) const;

  // Rebuilds with each block of the target partition fused into its
  // smallest member; edges into the other members are redirected there.
  Network merge_targets(const std::vector<std::vector<int>>& partition) const;

  // Rebuilds with edges into the given targets redirected to the source,
  // which silences those targets without disturbing the other rotors.
  Network hide_targets(const std::set<int>& hidden) const;

 private:
  int step_walk(std::vector<std::uint64_t>& positions, std::uint64_t& fired,
                const SimLimits& limits) const;
  std::vector<std::uint32_t> residues(const std::vector<std::uint64_t>& positions) const;

  int vertex_count_ = 0;
  int source_ = 0;
  std::set<int> targets_;
  std::vector<std::vector<int>> edges_;     // indexed by vertex id
  std::vector<std::vector<int>> patterns_;  // indexed by vertex id
  std::vector<std::uint64_t> positions_;
};

// Complete binary tree of the given depth with a two-state alternating
// rotor at every internal vertex. Internal vertices are 1..2^depth-1 in
// heap order (children of i are 2i and 2i+1); the 2^depth leaves are the
// targets, left to right.
Network build_binary_tree(int depth);

// Realizes an arbitrary rotor type as the hitting sequence of a network of
// alternating two-state rotors: binary tree, hide the surplus rightmost
// leaves, then fuse targets whose hit positions carry equal labels in r.
Network build_model_from_12(const RotorType& r);

struct DagBoundReport {
  int chain_length = 0;        // most non-target vertices on a source path
  std::uint64_t bound = 0;     // |r|^chain_length, saturating
  std::uint64_t period_length = 0;
  bool holds = false;
};

// For a homogeneous network whose directed cycles all pass through the
// source: checks the hitting period length against |r|^d.
DagBoundReport check_dag_bound(const Network& net, const SimLimits& limits = {});

}  // namespace rotorlab
