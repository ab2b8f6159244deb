#include "rotorlab/network.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "json.hpp"

namespace rotorlab {

namespace {

std::vector<int> fundamental_period(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (int i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return {w.begin(), w.begin() + d};
  }
  return w;
}

}  // namespace

Network::Network(int vertex_count, int source, std::vector<int> targets,
                 std::map<int, std::vector<int>> edges,
                 std::map<int, std::vector<int>> patterns)
    : vertex_count_(vertex_count), source_(source) {
  if (vertex_count < 1) throw std::invalid_argument("network: no vertices");
  auto check_vertex = [&](int v, const char* what) {
    if (v < 1 || v > vertex_count)
      throw std::invalid_argument(std::string("network: ") + what + " " +
                                  std::to_string(v) + " out of range");
  };
  check_vertex(source, "source");
  for (int t : targets) {
    check_vertex(t, "target");
    targets_.insert(t);
  }
  if (targets_.empty()) throw std::invalid_argument("network: no targets");
  if (targets_.count(source)) throw std::invalid_argument("network: source is a target");

  edges_.assign(static_cast<std::size_t>(vertex_count) + 1, {});
  patterns_.assign(static_cast<std::size_t>(vertex_count) + 1, {});
  for (auto& [v, dests] : edges) {
    check_vertex(v, "vertex");
    for (int d : dests) check_vertex(d, "edge destination");
    edges_[static_cast<std::size_t>(v)] = std::move(dests);
  }
  for (auto& [v, pat] : patterns) {
    check_vertex(v, "vertex");
    patterns_[static_cast<std::size_t>(v)] = std::move(pat);
  }

  for (int v = 1; v <= vertex_count; ++v) {
    const auto& out = edges_[static_cast<std::size_t>(v)];
    const auto& pat = patterns_[static_cast<std::size_t>(v)];
    if (is_target(v)) {
      if (!out.empty())
        throw std::invalid_argument("network: target " + std::to_string(v) +
                                    " has out-edges");
      continue;
    }
    if (out.empty())
      throw std::invalid_argument("network: vertex " + std::to_string(v) +
                                  " has no out-edges");
    if (pat.empty())
      throw std::invalid_argument("network: vertex " + std::to_string(v) +
                                  " has no rotor pattern");
    for (int s : pat)
      if (s < 1 || s > static_cast<int>(out.size()))
        throw std::invalid_argument("network: pattern state " + std::to_string(s) +
                                    " exceeds outdegree at vertex " + std::to_string(v));
  }

  // Every non-target must reach a target: reverse reachability from targets.
  std::vector<char> reaches(static_cast<std::size_t>(vertex_count) + 1, 0);
  std::vector<std::vector<int>> rev(static_cast<std::size_t>(vertex_count) + 1);
  for (int v = 1; v <= vertex_count; ++v)
    for (int d : edges_[static_cast<std::size_t>(v)])
      rev[static_cast<std::size_t>(d)].push_back(v);
  std::deque<int> queue(targets_.begin(), targets_.end());
  for (int t : targets_) reaches[static_cast<std::size_t>(t)] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : rev[static_cast<std::size_t>(v)])
      if (!reaches[static_cast<std::size_t>(u)]) {
        reaches[static_cast<std::size_t>(u)] = 1;
        queue.push_back(u);
      }
  }
  for (int v = 1; v <= vertex_count; ++v)
    if (!is_target(v) && !reaches[static_cast<std::size_t>(v)])
      throw std::invalid_argument("network: vertex " + std::to_string(v) +
                                  " cannot reach a target");

  positions_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
}

int Network::step_walk(std::vector<std::uint64_t>& positions, std::uint64_t& fired,
                       const SimLimits& limits) const {
  int v = source_;
  while (!is_target(v)) {
    if (fired >= limits.max_firings)
      throw std::runtime_error("network: step budget exceeded");
    const auto& pat = patterns_[static_cast<std::size_t>(v)];
    const int s = pat[positions[static_cast<std::size_t>(v)] % pat.size()];
    ++positions[static_cast<std::size_t>(v)];
    ++fired;
    v = edges_[static_cast<std::size_t>(v)][static_cast<std::size_t>(s - 1)];
  }
  return v;
}

int Network::walk_once(const SimLimits& limits) {
  std::uint64_t fired = 0;
  return step_walk(positions_, fired, limits);
}

void Network::reset() {
  std::fill(positions_.begin(), positions_.end(), 0);
}

std::vector<std::uint32_t> Network::residues(
    const std::vector<std::uint64_t>& positions) const {
  std::vector<std::uint32_t> key;
  key.reserve(static_cast<std::size_t>(vertex_count_));
  for (int v = 1; v <= vertex_count_; ++v) {
    if (is_target(v)) continue;
    const auto& pat = patterns_[static_cast<std::size_t>(v)];
    key.push_back(
        static_cast<std::uint32_t>(positions[static_cast<std::size_t>(v)] % pat.size()));
  }
  return key;
}

HittingSequence Network::hitting_sequence(const SimLimits& limits) const {
  auto positions = positions_;
  std::uint64_t fired = 0;
  std::map<std::vector<std::uint32_t>, std::size_t> seen;
  std::vector<int> hits;
  seen.emplace(residues(positions), 0);

  for (;;) {
    hits.push_back(step_walk(positions, fired, limits));
    auto [it, inserted] = seen.try_emplace(residues(positions), hits.size());
    if (inserted) continue;

    const std::size_t first = it->second;
    const std::size_t cycle = hits.size() - first;
    // The hit stream is periodic from the very first walk; the recurrence
    // only bounds the period, so replay-check the whole observed window.
    for (std::size_t t = 0; t + cycle < hits.size(); ++t)
      if (hits[t] != hits[t + cycle])
        throw std::logic_error("network: hit stream is not purely periodic");

    HittingSequence result;
    result.period = fundamental_period({hits.begin(), hits.begin() + cycle});
    result.prefix_walks = first;
    result.cycle_walks = cycle;
    result.firings = fired;
    return result;
  }
}

Network Network::merge_targets(const std::vector<std::vector<int>>& partition) const {
  std::map<int, int> representative;
  for (const auto& block : partition) {
    if (block.empty()) throw std::invalid_argument("merge: empty partition block");
    const int rep = *std::min_element(block.begin(), block.end());
    for (int t : block) {
      if (!is_target(t))
        throw std::invalid_argument("merge: " + std::to_string(t) + " is not a target");
      if (!representative.emplace(t, rep).second)
        throw std::invalid_argument("merge: target " + std::to_string(t) +
                                    " appears in two blocks");
    }
  }
  for (int t : targets_)
    if (!representative.count(t))
      throw std::invalid_argument("merge: partition does not cover target " +
                                  std::to_string(t));

  std::map<int, std::vector<int>> edges;
  std::map<int, std::vector<int>> patterns;
  for (int v = 1; v <= vertex_count_; ++v) {
    if (is_target(v)) continue;
    auto out = edges_[static_cast<std::size_t>(v)];
    for (int& d : out) {
      auto it = representative.find(d);
      if (it != representative.end()) d = it->second;
    }
    edges.emplace(v, std::move(out));
    patterns.emplace(v, patterns_[static_cast<std::size_t>(v)]);
  }
  return Network(vertex_count_, source_, {targets_.begin(), targets_.end()},
                 std::move(edges), std::move(patterns));
}

Network Network::hide_targets(const std::set<int>& hidden) const {
  for (int t : hidden)
    if (!is_target(t))
      throw std::invalid_argument("hide: " + std::to_string(t) + " is not a target");
  if (hidden.size() >= targets_.size())
    throw std::invalid_argument("hide: at least one target must remain");

  std::map<int, std::vector<int>> edges;
  std::map<int, std::vector<int>> patterns;
  for (int v = 1; v <= vertex_count_; ++v) {
    if (is_target(v)) continue;
    auto out = edges_[static_cast<std::size_t>(v)];
    for (int& d : out)
      if (hidden.count(d)) d = source_;
    edges.emplace(v, std::move(out));
    patterns.emplace(v, patterns_[static_cast<std::size_t>(v)]);
  }
  return Network(vertex_count_, source_, {targets_.begin(), targets_.end()},
                 std::move(edges), std::move(patterns));
}

Network build_binary_tree(int depth) {
  if (depth < 1 || depth > 20) throw std::invalid_argument("binary tree: bad depth");
  const int internal = (1 << depth) - 1;
  const int total = (1 << (depth + 1)) - 1;
  std::vector<int> targets;
  for (int v = internal + 1; v <= total; ++v) targets.push_back(v);
  std::map<int, std::vector<int>> edges;
  std::map<int, std::vector<int>> patterns;
  for (int v = 1; v <= internal; ++v) {
    edges.emplace(v, std::vector<int>{2 * v, 2 * v + 1});
    patterns.emplace(v, std::vector<int>{1, 2});
  }
  return Network(total, 1, std::move(targets), std::move(edges), std::move(patterns));
}

Network build_model_from_12(const RotorType& r) {
  const int m = r.period();
  int depth = 1;
  while ((1 << depth) < m) ++depth;

  Network net = build_binary_tree(depth);
  const int leaves = 1 << depth;
  const int first_leaf = leaves;  // ids: internal 1..2^d-1, leaves 2^d..2^(d+1)-1
  std::set<int> hidden;
  for (int i = m; i < leaves; ++i) hidden.insert(first_leaf + i);
  if (!hidden.empty()) net = net.hide_targets(hidden);

  // Hit order defines the positions to fuse: positions i and j share a
  // target exactly when r carries the same label there.
  Network probe = net;
  std::vector<int> order;
  std::set<int> seen;
  for (int i = 0; i < m; ++i) {
    const int t = probe.walk_once();
    if (!seen.insert(t).second)
      throw std::logic_error("model: a target repeated before all were hit");
    order.push_back(t);
  }

  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < m; ++i) blocks[r.at(i)].push_back(order[static_cast<std::size_t>(i)]);
  std::vector<std::vector<int>> partition;
  for (auto& [label, block] : blocks) partition.push_back(std::move(block));
  for (int t : hidden) partition.push_back({t});  // silenced targets stay singletons
  return net.merge_targets(partition);
}

DagBoundReport check_dag_bound(const Network& net, const SimLimits& limits) {
  // Homogeneity: every rotor pattern must describe the same rotor type.
  RotorType common = RotorType::canonicalize(net.pattern(net.source()));
  for (int v = 1; v <= net.vertex_count(); ++v) {
    if (net.is_target(v)) continue;
    if (RotorType::canonicalize(net.pattern(v)) != common)
      throw std::invalid_argument("dag bound: network is not homogeneous");
  }

  // Drop edges into the source; what remains must be acyclic, which is
  // exactly the requirement that every directed cycle passes the source.
  const int n = net.vertex_count();
  std::vector<std::vector<int>> pruned(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) {
    if (net.is_target(v)) continue;
    for (int d : net.out_edges(v))
      if (d != net.source()) pruned[static_cast<std::size_t>(v)].push_back(d);
  }
  std::vector<int> color(static_cast<std::size_t>(n) + 1, 0);  // 0 new, 1 open, 2 done
  std::vector<std::int64_t> chain(static_cast<std::size_t>(n) + 1, -1);
  auto dfs = [&](auto&& self, int v) -> std::int64_t {
    if (color[static_cast<std::size_t>(v)] == 1)
      throw std::invalid_argument("dag bound: a directed cycle avoids the source");
    if (color[static_cast<std::size_t>(v)] == 2)
      return chain[static_cast<std::size_t>(v)];
    color[static_cast<std::size_t>(v)] = 1;
    std::int64_t best = 0;
    for (int d : pruned[static_cast<std::size_t>(v)])
      best = std::max(best, self(self, d));
    color[static_cast<std::size_t>(v)] = 2;
    chain[static_cast<std::size_t>(v)] = best + (net.is_target(v) ? 0 : 1);
    return chain[static_cast<std::size_t>(v)];
  };

  DagBoundReport report;
  report.chain_length = static_cast<int>(dfs(dfs, net.source()));

  std::uint64_t bound = 1;
  const std::uint64_t base = static_cast<std::uint64_t>(common.period());
  for (int i = 0; i < report.chain_length; ++i) {
    if (bound > UINT64_MAX / base) {
      bound = UINT64_MAX;
      break;
    }
    bound *= base;
  }
  report.bound = bound;
  report.period_length = net.hitting_sequence(limits).period.size();
  report.holds = report.period_length <= report.bound;
  return report;
}

namespace {

using nlohmann::json;

}  // namespace

Network Network::from_json_text(const std::string& text) {
  json j = json::parse(text);
  const int vertices = j.at("vertices").get<int>();
  const int source = j.at("source").get<int>();
  std::vector<int> targets = j.at("targets").get<std::vector<int>>();
  std::map<int, std::vector<int>> edges;
  for (auto& [key, value] : j.at("edges").items())
    edges.emplace(std::stoi(key), value.get<std::vector<int>>());
  std::map<int, std::vector<int>> patterns;
  for (auto& [key, value] : j.at("patterns").items())
    patterns.emplace(std::stoi(key), parse_word(value.get<std::string>()));
  return Network(vertices, source, std::move(targets), std::move(edges),
                 std::move(patterns));
}

std::string Network::to_json_text() const {
  json j;
  j["vertices"] = vertex_count_;
  j["source"] = source_;
  j["targets"] = std::vector<int>(targets_.begin(), targets_.end());
  json edges = json::object();
  json patterns = json::object();
  for (int v = 1; v <= vertex_count_; ++v) {
    if (is_target(v)) continue;
    edges[std::to_string(v)] = edges_[static_cast<std::size_t>(v)];
    patterns[std::to_string(v)] = format_word(patterns_[static_cast<std::size_t>(v)]);
  }
  j["edges"] = std::move(edges);
  j["patterns"] = std::move(patterns);
  return j.dump(2) + "\n";
}

}  // namespace rotorlab
