#include "rotorlab/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rotorlab/classify.hpp"

namespace rotorlab {

std::string ReductionRule::str() const {
  if (kind == Kind::merge)
    return std::to_string(source) + "->" + std::to_string(target);
  return "x(" + std::to_string(source) + ")";
}

namespace {

bool occurs(std::span<const int> word, int state) {
  return std::find(word.begin(), word.end(), state) != word.end();
}

}  // namespace

RotorType apply_reduction(std::span<const int> word, const ReductionRule& rule) {
  if (!occurs(word, rule.source))
    throw std::invalid_argument("reduction: state " + std::to_string(rule.source) +
                                " does not occur");
  std::vector<int> out;
  out.reserve(word.size());
  if (rule.kind == ReductionRule::Kind::merge) {
    if (rule.source == rule.target)
      throw std::invalid_argument("reduction: merge of a state into itself");
    if (!occurs(word, rule.target))
      throw std::invalid_argument("reduction: state " + std::to_string(rule.target) +
                                  " does not occur");
    for (int s : word) out.push_back(s == rule.source ? rule.target : s);
  } else {
    for (int s : word)
      if (s != rule.source) out.push_back(s);
    if (out.empty())
      throw std::invalid_argument("reduction: deletion empties the rotor");
  }
  return RotorType::canonicalize(out);
}

RotorType apply_reduction(const RotorType& r, const ReductionRule& rule) {
  return apply_reduction(std::span<const int>(r.symbols()), rule);
}

std::vector<ReductionRule> enumerate_reductions(std::span<const int> word) {
  std::set<int> states(word.begin(), word.end());
  std::vector<ReductionRule> rules;
  for (int s : states)
    for (int t : states)
      if (t < s) rules.push_back(ReductionRule::merge(s, t));
  for (int s : states) rules.push_back(ReductionRule::erase(s));
  return rules;
}

std::vector<ReductionRule> enumerate_reductions(const RotorType& r) {
  return enumerate_reductions(std::span<const int>(r.symbols()));
}

UnboppyReduction find_unboppy_reduction(std::span<const int> word) {
  const RotorType r = RotorType::canonicalize(word);
  if (r.state_count() < 3)
    throw std::invalid_argument("unboppy reduction search: need at least three states");
  if (classify(r).boppy)
    throw std::invalid_argument("unboppy reduction search: rotor is boppy");
  for (const auto& rule : enumerate_reductions(word)) {
    RotorType reduced = apply_reduction(word, rule);
    if (!reduced.trivial() && !classify(reduced).boppy) return {rule, std::move(reduced)};
  }
  throw std::logic_error("unboppy reduction search: no unboppy reduction exists");
}

UnboppyReduction find_unboppy_reduction(const RotorType& r) {
  return find_unboppy_reduction(std::span<const int>(r.symbols()));
}

}  // namespace rotorlab
