#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "perfcodes/gf2.hpp"
#include "perfcodes/word.hpp"

namespace perfcodes {

/// A code given by a membership predicate. The predicate must be pure, so an
/// oracle can be probed concurrently and repeatedly with identical results.
/// `enumerate` is optional: large codes are handled through membership alone.
struct CodeOracle {
  int length = 0;
  std::function<bool(const Word&)> contains;
  std::function<std::vector<Word>()> enumerate;
  std::optional<std::uint64_t> cardinality;

  bool has_enumerator() const { return static_cast<bool>(enumerate); }
};

CodeOracle oracle_from_linear(const LinearCode& code);
CodeOracle oracle_from_words(int length, std::vector<Word> words);

struct VerifyOptions {
  int exhaustive_limit = 20;              // full scan of Q_n up to this length
  std::optional<std::uint64_t> samples;   // required beyond the limit
  std::uint64_t seed = 0;
};

struct PerfectnessReport {
  bool is_perfect = false;
  std::optional<Word> witness;  // word whose radius-1 ball is not covered exactly once
  bool sampled = false;
  std::uint64_t words_checked = 0;
};

/// Checks that every probed word of Q_n has exactly one codeword within
/// Hamming distance 1. Exhaustive over Q_n when the length permits,
/// otherwise over `samples` random words drawn with the given seed.
PerfectnessReport verify_perfect(const CodeOracle& code, const VerifyOptions& options = {});

/// Checks closure under complementation, over all codewords when an
/// enumerator is present, otherwise over random probes.
bool verify_antipodal(const CodeOracle& code, std::optional<std::uint64_t> samples = {}, std::uint64_t seed = 0);

/// Codewords at distance exactly 3 from a codeword `center`, found by probing
/// all weight-3 translates. Supports only d = 3.
std::vector<Word> codewords_at_distance(const CodeOracle& code, const Word& center, int d);

int min_pairwise_distance(const std::vector<Word>& words);

}  // namespace perfcodes
