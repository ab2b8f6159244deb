#include "rotorlab/universality.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

#include "rotorlab/classify.hpp"
#include "rotorlab/enumerate.hpp"

namespace rotorlab {

namespace {

const RotorType& rotor12() {
  static const RotorType r = RotorType::parse("12");
  return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

constexpr CompressorVariant kRandomMaps[4] = {CompressorVariant::uu, CompressorVariant::ud,
                                              CompressorVariant::du, CompressorVariant::dd};

}  // namespace

std::uint64_t per_rotor_seed(std::uint64_t master_seed, const std::string& literal) {
  return splitmix64(master_seed ^ fnv1a64(literal));
}

CompressorTrajectory compressor_algorithm(const RotorType& r, const AlgoConfig& cfg) {
  if (r.trivial())
    throw std::invalid_argument("compressor algorithm: trivial rotor");
  if (r.state_count() != 2)
    throw std::invalid_argument("compressor algorithm: rotor must have two states");
  if (classify(r).boppy)
    throw std::invalid_argument(
        "compressor algorithm: boppy rotors cannot be universal; refused");

  CompressorTrajectory traj;
  traj.start = r;
  traj.rng_seed = per_rotor_seed(cfg.master_seed, r.str());

  if (r == rotor12()) {
    traj.outcome = CompressorTrajectory::Outcome::universal;
    traj.attempts_used = 0;
    return traj;
  }

  auto first = apply_compressor(r, CompressorVariant::ud);
  traj.applications_used = 1;
  const RotorType base = first.canonical;
  const TrajectoryStep opening{CompressorVariant::ud, std::move(first.raw), base};
  traj.steps.push_back(opening);
  if (base == rotor12()) {
    traj.outcome = CompressorTrajectory::Outcome::universal;
    traj.attempts_used = 1;
    return traj;
  }

  std::mt19937_64 rng(traj.rng_seed);
  for (int attempt = 0; attempt <= cfg.max_restarts; ++attempt) {
    traj.attempts_used = attempt + 1;
    std::vector<TrajectoryStep> steps{opening};
    RotorType cur = base;
    for (int app = 0; app < cfg.max_apps; ++app) {
      const CompressorVariant v = kRandomMaps[rng() & 3u];
      auto out = apply_compressor(cur, v);
      ++traj.applications_used;
      cur = out.canonical;
      steps.push_back({v, std::move(out.raw), cur});
      if (cur == rotor12()) {
        traj.steps = std::move(steps);
        traj.outcome = CompressorTrajectory::Outcome::universal;
        return traj;
      }
    }
    traj.steps = std::move(steps);  // keep the last attempt for inspection
  }
  traj.outcome = CompressorTrajectory::Outcome::undecided;
  return traj;
}

namespace {

// Word-level classification used by the enumeration. A repeated word is
// handled through its canonical rotor, which behaves identically in every
// network, so its verdict carries over.
enum class WordVerdict : std::uint8_t { trivial = 0, boppy = 1, universal = 2, undecided = 3 };

WordVerdict classify_and_run(const std::vector<int>& word, const AlgoConfig& cfg) {
  if (std::find(word.begin(), word.end(), 2) == word.end()) return WordVerdict::trivial;
  if (is_palindromic_word(word)) return WordVerdict::boppy;
  for (int m = 2; m <= static_cast<int>(word.size()); ++m)
    if (static_cast<int>(word.size()) % m == 0 && blocks_uniform(word, m))
      return WordVerdict::boppy;
  const RotorType rotor = RotorType::canonicalize(word);
  const auto traj = compressor_algorithm(rotor, cfg);
  return traj.outcome == CompressorTrajectory::Outcome::universal ? WordVerdict::universal
                                                                  : WordVerdict::undecided;
}

}  // namespace

TableRow enumerate_table(int n, const AlgoConfig& cfg, int workers) {
  if (n < 2 || n > 24)
    throw std::invalid_argument("enumerate: length must be between 2 and 24");
  const std::uint64_t total = 1ull << (n - 1);

  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));

  std::vector<std::uint8_t> verdicts(total);
  std::atomic<std::uint64_t> next{0};
  constexpr std::uint64_t kChunk = 64;

  auto work = [&]() {
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= total) return;
      const std::uint64_t end = std::min(begin + kChunk, total);
      for (std::uint64_t i = begin; i < end; ++i)
        verdicts[i] =
            static_cast<std::uint8_t>(classify_and_run(binary_word(n, i), cfg));
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  TableRow row;
  row.length = n;
  row.total_words = total;
  for (std::uint64_t i = 0; i < total; ++i) {
    switch (static_cast<WordVerdict>(verdicts[i])) {
      case WordVerdict::trivial: ++row.trivial_count; break;
      case WordVerdict::boppy: ++row.boppy_count; break;
      case WordVerdict::universal: ++row.unboppy_count; break;
      case WordVerdict::undecided:
        ++row.unboppy_count;
        ++row.undecided_count;
        row.undecided.push_back(format_word(binary_word(n, i)));
        break;
    }
  }
  return row;
}

const std::vector<std::pair<int, std::uint64_t>>& reference_undecided_counts() {
  static const std::vector<std::pair<int, std::uint64_t>> table = {
      {2, 0}, {3, 0}, {4, 0},  {5, 0},  {6, 2},  {7, 0},  {8, 5},   {9, 9},
      {10, 22}, {11, 0}, {12, 36}, {13, 0}, {14, 12}, {15, 52}, {16, 136}, {17, 0}};
  return table;
}

RotorType family_rotor(FamilyKind kind, int k, int l) {
  std::vector<int> word;
  switch (kind) {
    case FamilyKind::ones_then_two:
      if (k < 1) throw std::invalid_argument("family: k must be positive");
      word.assign(static_cast<std::size_t>(k), 1);
      word.push_back(2);
      break;
    case FamilyKind::double_ones:
      for (int i = 0; i < k; ++i) {
        word.push_back(1);
        word.push_back(1);
      }
      word.push_back(2);
      word.push_back(1);
      break;
    case FamilyKind::sandwich:
      for (int i = 0; i < k; ++i) {
        word.push_back(1);
        word.push_back(2);
      }
      word.push_back(2);
      word.push_back(1);
      for (int i = 0; i < l; ++i) {
        word.push_back(1);
        word.push_back(2);
      }
      break;
  }
  return RotorType::canonicalize(word);
}

std::vector<FamilyVerdict> check_family(FamilyKind kind, int k_max, int l_max,
                                        const AlgoConfig& cfg) {
  std::vector<FamilyVerdict> verdicts;
  auto run_one = [&](int k, int l, std::string description) {
    FamilyVerdict v{std::move(description), family_rotor(kind, k, l), false, false};
    if (v.rotor.trivial() || classify(v.rotor).boppy) {
      v.boppy_excluded = true;
    } else {
      v.universal = compressor_algorithm(v.rotor, cfg).outcome ==
                    CompressorTrajectory::Outcome::universal;
    }
    verdicts.push_back(std::move(v));
  };
  switch (kind) {
    case FamilyKind::ones_then_two:
      for (int k = 1; k <= k_max; ++k) run_one(k, 0, "1^" + std::to_string(k) + " 2");
      break;
    case FamilyKind::double_ones:
      for (int k = 0; k <= k_max; ++k) run_one(k, 0, "(11)^" + std::to_string(k) + " 21");
      break;
    case FamilyKind::sandwich:
      for (int k = 0; k <= k_max; ++k)
        for (int l = 0; l <= l_max; ++l)
          run_one(k, l,
                  "(12)^" + std::to_string(k) + " 21 (12)^" + std::to_string(l));
      break;
  }
  return verdicts;
}

std::vector<std::uint8_t> zero_one_transform(const std::vector<std::uint8_t>& a,
                                             CompressorVariant v) {
  if (v != CompressorVariant::uu && v != CompressorVariant::dd)
    throw std::invalid_argument("zero-one transform: only uu and dd act on blocks");
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  if (n == 0) throw std::invalid_argument("zero-one transform: empty sequence");
  auto at = [&](std::int64_t index_1based) {
    std::int64_t i = (index_1based - 1) % n;
    if (i < 0) i += n;
    return a[static_cast<std::size_t>(i)];
  };
  std::vector<std::uint8_t> out(a.size());
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int64_t ai = at(i);
    out[static_cast<std::size_t>(i - 1)] =
        v == CompressorVariant::uu ? at(2 * i - ai) : at(2 * i - 1 + ai);
  }
  return out;
}

namespace {

std::vector<std::uint8_t> encode_blocks(const std::vector<int>& word) {
  std::vector<std::uint8_t> bits;
  for (std::size_t i = 0; i < word.size(); i += 2) {
    if (word[i] == word[i + 1]) throw std::invalid_argument("encode: not ab-ba");
    bits.push_back(word[i] == 2 ? 1 : 0);
  }
  return bits;
}

std::vector<int> decode_blocks(const std::vector<std::uint8_t>& bits) {
  std::vector<int> word;
  for (std::uint8_t b : bits) {
    word.push_back(b ? 2 : 1);
    word.push_back(b ? 1 : 2);
  }
  return word;
}

int count_ones(const std::vector<std::uint8_t>& bits) {
  int k = 0;
  for (std::uint8_t b : bits) k += b;
  return k;
}

int one_position(const std::vector<std::uint8_t>& bits) {  // 1-based
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) return static_cast<int>(i) + 1;
  return 0;
}

}  // namespace

CompressorTrajectory one21_verdict(const RotorType& r) {
  if (!is_abba(r)) throw std::invalid_argument("one-21 certificate: rotor is not ab-ba");
  std::vector<std::uint8_t> bits = encode_blocks(r.symbols());
  const int blocks = static_cast<int>(bits.size());
  if (count_ones(bits) != 1)
    throw std::invalid_argument("one-21 certificate: need exactly one reversed block");
  if (blocks - 1 < 2)
    throw std::invalid_argument("one-21 certificate: need at least two plain blocks");

  CompressorTrajectory traj;
  traj.start = r;
  traj.attempts_used = 1;

  // Work on the unreduced block sequence. The two transforms preserve the
  // length and distribute the doubled reversed block between the images:
  // either both keep exactly one, or one image goes constant and the rotor
  // type collapses to 12. The greedy choice halves the block position
  // until that happens. Physical replay flips the variant letters whenever
  // the current word leads with a reversed block, because the network
  // anchors its orientation on the first term actually fired.
  auto physically = [&](CompressorVariant v, bool leading_reversed) {
    if (!leading_reversed) return v;
    return v == CompressorVariant::uu ? CompressorVariant::dd : CompressorVariant::uu;
  };
  auto record = [&](CompressorVariant v, const std::vector<std::uint8_t>& next_bits,
                    bool leading_reversed) {
    const CompressorVariant phys = physically(v, leading_reversed);
    auto out = apply_compressor(RotorType::canonicalize(decode_blocks(bits)), phys);
    ++traj.applications_used;
    if (out.canonical != RotorType::canonicalize(decode_blocks(next_bits)))
      throw std::logic_error("one-21 certificate: block dynamics diverged from network");
    traj.steps.push_back({phys, std::move(out.raw), out.canonical});
  };

  const int guard = 4 * blocks + 8;
  for (int iter = 0; iter < guard; ++iter) {
    const bool leading_reversed = bits[0] == 1;
    const auto uu = zero_one_transform(bits, CompressorVariant::uu);
    const auto dd = zero_one_transform(bits, CompressorVariant::dd);
    const int uu_ones = count_ones(uu);
    const int dd_ones = count_ones(dd);
    if (uu_ones + dd_ones != 2)
      throw std::logic_error("one-21 certificate: reversed-block count not conserved");

    if (uu_ones == 0 || dd_ones == 0) {
      const auto& constant = uu_ones == 0 ? uu : dd;
      record(uu_ones == 0 ? CompressorVariant::uu : CompressorVariant::dd, constant,
             leading_reversed);
      traj.outcome = CompressorTrajectory::Outcome::universal;
      if (traj.steps.back().rotor != RotorType::parse("12"))
        throw std::logic_error("one-21 certificate: constant image is not 12");
      return traj;
    }

    // Both images keep a single reversed block; follow the one at the
    // halved position (for odd block counts) or the stated landing spots
    // for the two even-count edge cases.
    const int f = one_position(bits);
    int target;
    if (blocks % 2 == 1) {
      target = (f + 1) / 2;
    } else if (f == 1) {
      target = blocks / 2 + 1;
    } else if (f == blocks) {
      target = blocks / 2;
    } else {
      throw std::logic_error("one-21 certificate: even case expected an immediate erase");
    }
    if (one_position(uu) == target) {
      record(CompressorVariant::uu, uu, leading_reversed);
      bits = uu;
    } else if (one_position(dd) == target) {
      record(CompressorVariant::dd, dd, leading_reversed);
      bits = dd;
    } else {
      throw std::logic_error("one-21 certificate: neither image lands on the target");
    }
  }
  throw std::logic_error("one-21 certificate: did not terminate");
}

AbbaSurveyResult abba_survey(int max_length, const AlgoConfig& cfg) {
  AbbaSurveyResult result;
  result.max_length = max_length;
  for (int n = 2; n <= max_length; n += 4) {
    for (const auto& r : all_abba_rotors(n)) {
      ++result.checked;
      if (r == RotorType::parse("12")) continue;
      if (classify(r).boppy) {
        result.failures.push_back(r);  // should be impossible at these lengths
        continue;
      }
      if (compressor_algorithm(r, cfg).outcome != CompressorTrajectory::Outcome::universal)
        result.failures.push_back(r);
    }
  }
  return result;
}

}  // namespace rotorlab
