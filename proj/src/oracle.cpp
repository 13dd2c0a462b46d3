#include "perfcodes/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace perfcodes {

CodeOracle oracle_from_linear(const LinearCode& code) {
  CodeOracle oracle;
  oracle.length = code.length();
  oracle.contains = [code](const Word& w) { return code.contains(w); };
  if (code.dimension() <= LinearCode::kDefaultEnumerationLimit)
    oracle.enumerate = [code]() {
      std::vector<Word> words = code.codewords();
      std::sort(words.begin(), words.end());
      return words;
    };
  oracle.cardinality = code.size();
  return oracle;
}

CodeOracle oracle_from_words(int length, std::vector<Word> words) {
  for (const Word& w : words)
    if (w.length() != length) throw std::invalid_argument("word length mismatch");
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  CodeOracle oracle;
  oracle.length = length;
  oracle.contains = [words, length](const Word& w) {
    if (w.length() != length) throw std::invalid_argument("word length does not match code length");
    return std::binary_search(words.begin(), words.end(), w);
  };
  oracle.enumerate = [words]() { return words; };
  oracle.cardinality = words.size();
  return oracle;
}

namespace {

// Number of codewords in the closed radius-1 ball around w; stops counting at 2.
int ball_hits(const CodeOracle& code, const Word& w) {
  int hits = code.contains(w) ? 1 : 0;
  for (int i = 1; i <= code.length && hits < 2; ++i)
    if (code.contains(w + Word::unit(code.length, i))) ++hits;
  return hits;
}

}  // namespace

PerfectnessReport verify_perfect(const CodeOracle& code, const VerifyOptions& options) {
  PerfectnessReport report;
  int n = code.length;
  if (n <= options.exhaustive_limit) {
    for (std::uint64_t u = 0; u < (1ull << n); ++u) {
      Word w(n, u);
      ++report.words_checked;
      if (ball_hits(code, w) != 1) {
        report.witness = w;
        return report;
      }
    }
    report.is_perfect = true;
    return report;
  }
  if (!options.samples)
    throw std::invalid_argument("length exceeds exhaustive limit; sampled mode needs a sample count");
  report.sampled = true;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, Word::mask(n));
  for (std::uint64_t s = 0; s < *options.samples; ++s) {
    Word w(n, dist(rng));
    ++report.words_checked;
    if (ball_hits(code, w) != 1) {
      report.witness = w;
      return report;
    }
  }
  report.is_perfect = true;
  return report;
}

bool verify_antipodal(const CodeOracle& code, std::optional<std::uint64_t> samples, std::uint64_t seed) {
  Word all_ones = Word::ones(code.length);
  if (code.has_enumerator()) {
    for (const Word& c : code.enumerate())
      if (!code.contains(all_ones + c)) return false;
    return true;
  }
  if (!samples) throw std::invalid_argument("antipodality without an enumerator needs a sample count");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, Word::mask(code.length));
  for (std::uint64_t s = 0; s < *samples; ++s) {
    Word w(code.length, dist(rng));
    if (code.contains(w) && !code.contains(all_ones + w)) return false;
  }
  return true;
}

std::vector<Word> codewords_at_distance(const CodeOracle& code, const Word& center, int d) {
  if (d != 3) throw std::invalid_argument("only distance 3 is supported");
  if (!code.contains(center)) throw std::invalid_argument("center is not a codeword");
  int n = code.length;
  std::vector<Word> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        std::uint64_t e = (1ull << (a - 1)) | (1ull << (b - 1)) | (1ull << (c - 1));
        Word w(n, center.bits() ^ e);
        if (code.contains(w)) out.push_back(w);
      }
  return out;
}

int min_pairwise_distance(const std::vector<Word>& words) {
  if (words.size() < 2) throw std::invalid_argument("need at least two words");
  int best = words.front().length() + 1;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, distance(words[i], words[j]));
  return best;
}

}  // namespace perfcodes
