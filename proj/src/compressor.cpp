#include "rotorlab/compressor.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <map>
#include <stdexcept>

#include "rotorlab/classify.hpp"
#include "rotorlab/enumerate.hpp"

namespace rotorlab {

const char* variant_name(CompressorVariant v) {
  switch (v) {
    case CompressorVariant::uu: return "UU";
    case CompressorVariant::ud: return "UD";
    case CompressorVariant::du: return "DU";
    case CompressorVariant::dd: return "DD";
    case CompressorVariant::bt: return "BT";
  }
  return "?";
}

CompressorVariant parse_variant(const std::string& name) {
  std::string up = name;
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (up == "UU") return CompressorVariant::uu;
  if (up == "UD") return CompressorVariant::ud;
  if (up == "DU") return CompressorVariant::du;
  if (up == "DD") return CompressorVariant::dd;
  if (up == "BT") return CompressorVariant::bt;
  throw std::invalid_argument("unknown compressor variant '" + name + "'");
}

namespace {

void require_two_state(const RotorType& r) {
  if (r.state_count() != 2)
    throw std::invalid_argument("compressor: rotor must have exactly two states");
}

}  // namespace

CompressResult apply_compressor(const RotorType& r, CompressorVariant v) {
  require_two_state(r);
  const auto& w = r.symbols();
  const int n = r.period();
  const bool balanced = is_balanced(r);
  // Balanced input: two source periods drain one period of each side rotor
  // and restore the whole state. Otherwise n source periods do.
  const std::int64_t window = static_cast<std::int64_t>(n) * (balanced ? 2 : n);

  const bool left_up_first = v == CompressorVariant::uu || v == CompressorVariant::ud;
  const bool right_up_first = v == CompressorVariant::uu || v == CompressorVariant::du;

  CompressResult result;
  std::int64_t left = 0, right = 0;
  for (std::int64_t c = 0; c < window; ++c) {
    if (w[static_cast<std::size_t>(c % n)] == 1) {
      const int t = w[static_cast<std::size_t>(left++ % n)];
      if (v == CompressorVariant::bt) {
        result.raw.push_back(t == 1 ? 1 : 2);
      } else if (t == (left_up_first ? 2 : 1)) {
        result.raw.push_back(4);
      }
    } else {
      const int t = w[static_cast<std::size_t>(right++ % n)];
      if (v == CompressorVariant::bt) {
        result.raw.push_back(t == 1 ? 3 : 4);
      } else if (t == (right_up_first ? 2 : 1)) {
        result.raw.push_back(5);
      }
    }
  }
  assert(left % n == 0 && right % n == 0);

  if (v != CompressorVariant::bt) {
    result.oriented.reserve(result.raw.size());
    for (int t : result.raw) result.oriented.push_back(t == 4 ? 1 : 2);
  }
  result.canonical = RotorType::canonicalize(result.raw);
  return result;
}

Network build_compressor_network(const RotorType& r, CompressorVariant v) {
  require_two_state(r);
  const std::vector<int>& pat = r.symbols();
  std::map<int, std::vector<int>> edges;
  std::map<int, std::vector<int>> patterns;
  edges.emplace(1, std::vector<int>{2, 3});
  patterns.emplace(1, pat);
  patterns.emplace(2, pat);
  patterns.emplace(3, pat);
  if (v == CompressorVariant::bt) {
    edges.emplace(2, std::vector<int>{4, 5});
    edges.emplace(3, std::vector<int>{6, 7});
    return Network(7, 1, {4, 5, 6, 7}, std::move(edges), std::move(patterns));
  }
  const bool left_up_first = v == CompressorVariant::uu || v == CompressorVariant::ud;
  const bool right_up_first = v == CompressorVariant::uu || v == CompressorVariant::du;
  edges.emplace(2, left_up_first ? std::vector<int>{1, 4} : std::vector<int>{4, 1});
  edges.emplace(3, right_up_first ? std::vector<int>{1, 5} : std::vector<int>{5, 1});
  return Network(5, 1, {4, 5}, std::move(edges), std::move(patterns));
}

PositionFunctions::PositionFunctions(const RotorType& r) {
  if (!is_balanced(r))
    throw std::invalid_argument("position functions: rotor must be balanced");
  period_ = r.period();
  half_ = period_ / 2;
  pref1_.assign(static_cast<std::size_t>(period_) + 1, 0);
  for (int i = 0; i < period_; ++i) {
    pref1_[static_cast<std::size_t>(i) + 1] =
        pref1_[static_cast<std::size_t>(i)] + (r.at(i) == 1 ? 1 : 0);
    if (r.at(i) == 1)
      pos1_.push_back(i + 1);
    else
      pos2_.push_back(i + 1);
  }
}

std::int64_t PositionFunctions::f(std::int64_t m) const {
  const std::int64_t q = (m - 1) / half_;
  const std::int64_t i = (m - 1) % half_;
  return q * period_ + pos1_[static_cast<std::size_t>(i)];
}

std::int64_t PositionFunctions::g(std::int64_t m) const {
  const std::int64_t q = (m - 1) / half_;
  const std::int64_t i = (m - 1) % half_;
  return q * period_ + pos2_[static_cast<std::size_t>(i)];
}

std::int64_t PositionFunctions::F(std::int64_t p) const {
  const std::int64_t q = p / period_;
  const std::int64_t rem = p % period_;
  return q * half_ + pref1_[static_cast<std::size_t>(rem)];
}

std::int64_t PositionFunctions::G(std::int64_t p) const { return p - F(p); }

std::int64_t position_of_mth_four_ud(const RotorType& r, std::int64_t m) {
  PositionFunctions pf(r);
  return pf.F(pf.G(pf.f(pf.g(m)))) + m;
}

PalindromeConstraintReport check_palindrome_constraints(const RotorType& r) {
  PositionFunctions pf(r);
  const auto ud = apply_compressor(r, CompressorVariant::ud);

  PalindromeConstraintReport report;
  report.ud_palindromic = is_palindromic_word(ud.raw);
  if (!report.ud_palindromic) return report;

  const std::int64_t h = pf.half();
  for (std::int64_t m = 1; m <= h; ++m) {
    const std::int64_t lhs4 = pf.F(pf.G(pf.f(pf.g(m)))) +
                              pf.F(pf.G(pf.f(pf.g(h - m + 1))));
    if (lhs4 != h) report.symmetry_fours = false;
    const std::int64_t lhs5 = pf.G(pf.F(pf.g(pf.f(m)))) +
                              pf.G(pf.F(pf.g(pf.f(h - m + 1))));
    if (lhs5 != h) report.symmetry_fives = false;
  }
  report.starts_ends_same = r.at(0) == r.at(r.period() - 1);
  return report;
}

std::vector<RunSplit> split_analysis(const RotorType& r) {
  const auto brd = maximal_brd(r);
  const auto& w = r.symbols();
  const int n = r.period();

  std::vector<RunSplit> splits;
  for (int copy = 0; copy < 2; ++copy) {
    for (const auto& [start, length] : brd.runs) {
      RunSplit s;
      s.run_start = copy * n + start;
      s.run_length = length;
      s.half_start = s.run_start / 2;
      int ones = 0;
      for (int j = 0; j < length / 2; ++j)
        ones += w[static_cast<std::size_t>((s.half_start + j) % n)] == 1;
      const int twos = length / 2 - ones;
      s.uu_length = 2 * twos;
      s.dd_length = 2 * ones;
      s.uniform_exception = ones == 0 || twos == 0;
      splits.push_back(s);
    }
  }
  return splits;
}

MonovariantReport monovariant_report(const RotorType& r) {
  const auto uu = apply_compressor(r, CompressorVariant::uu);
  const auto dd = apply_compressor(r, CompressorVariant::dd);

  MonovariantReport report;
  report.b_r = balance_coefficient(r);
  report.b_uu = balance_coefficient(uu.canonical);
  report.b_dd = balance_coefficient(dd.canonical);
  report.inequality_holds = report.b_uu + report.b_dd >= 2 * report.b_r;
  report.strict_increase = report.b_uu > report.b_r || report.b_dd > report.b_r;

  report.abba = is_abba(r);
  if (report.abba) {
    report.m_r = ba_frequency(r);
    report.m_uu = ba_frequency_word(uu.oriented);
    report.m_dd = ba_frequency_word(dd.oriented);
    report.m_identity_holds = report.m_uu + report.m_dd == 2 * report.m_r;
  }
  return report;
}

std::vector<std::vector<RotorType>> fixed_cycle_search(int period) {
  if (period < 2 || period % 2 != 0 || period > 30)
    throw std::invalid_argument("fixed cycles: period must be even and small");

  const auto rotors = all_balanced_rotors(period);
  std::map<RotorType, std::size_t> index;
  for (std::size_t i = 0; i < rotors.size(); ++i) index.emplace(rotors[i], i);

  constexpr CompressorVariant kMaps[4] = {CompressorVariant::uu, CompressorVariant::ud,
                                          CompressorVariant::du, CompressorVariant::dd};
  const std::size_t count = rotors.size();
  std::vector<std::array<std::int64_t, 4>> image(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (int k = 0; k < 4; ++k) {
      const RotorType out = apply_compressor(rotors[i], kMaps[k]).canonical;
      auto it = index.find(out);
      image[i][static_cast<std::size_t>(k)] =
          it == index.end() ? -1 : static_cast<std::int64_t>(it->second);
    }
  }

  // Tarjan over the four-image graph; period-shrinking images leave the
  // vertex set, which already disqualifies their sources from any cycle.
  std::vector<int> order(count, -1), low(count, 0);
  std::vector<char> on_stack(count, 0);
  std::vector<std::size_t> stack;
  std::vector<std::int64_t> component(count, -1);
  int next_order = 0;
  std::int64_t next_component = 0;

  auto strongconnect = [&](auto&& self, std::size_t v) -> void {
    order[v] = low[v] = next_order++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int k = 0; k < 4; ++k) {
      const std::int64_t wi = image[v][static_cast<std::size_t>(k)];
      if (wi < 0) continue;
      const auto u = static_cast<std::size_t>(wi);
      if (order[u] < 0) {
        self(self, u);
        low[v] = std::min(low[v], low[u]);
      } else if (on_stack[u]) {
        low[v] = std::min(low[v], order[u]);
      }
    }
    if (low[v] == order[v]) {
      for (;;) {
        const std::size_t u = stack.back();
        stack.pop_back();
        on_stack[u] = 0;
        component[u] = next_component;
        if (u == v) break;
      }
      ++next_component;
    }
  };
  for (std::size_t v = 0; v < count; ++v)
    if (order[v] < 0) strongconnect(strongconnect, v);

  // A fixed cycle is a strongly connected component closed under all four
  // maps (no image may shrink the period or land in another component).
  std::vector<char> closed(static_cast<std::size_t>(next_component), 1);
  for (std::size_t v = 0; v < count; ++v)
    for (int k = 0; k < 4; ++k) {
      const std::int64_t wi = image[v][static_cast<std::size_t>(k)];
      if (wi < 0 || component[static_cast<std::size_t>(wi)] != component[v])
        closed[static_cast<std::size_t>(component[v])] = 0;
    }

  std::map<std::int64_t, std::vector<RotorType>> grouped;
  for (std::size_t v = 0; v < count; ++v)
    if (closed[static_cast<std::size_t>(component[v])])
      grouped[component[v]].push_back(rotors[v]);

  std::vector<std::vector<RotorType>> cycles;
  for (auto& [id, members] : grouped) {
    std::sort(members.begin(), members.end());
    cycles.push_back(std::move(members));
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace rotorlab
