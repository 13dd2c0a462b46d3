#include "perfcodes/components.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "perfcodes/vasilev.hpp"

namespace perfcodes {

namespace {

// R(beta) membership on raw bits: first half a, second half a + beta, parity
// coordinate |a|.
bool in_component(std::uint64_t bits, int k, std::uint64_t beta_bits) {
  std::uint64_t x1 = bits & Word::mask(k);
  std::uint64_t x2 = (bits >> k) & Word::mask(k);
  if ((x1 ^ x2) != beta_bits) return false;
  return ((bits >> (2 * k)) & 1) == (static_cast<std::uint64_t>(std::popcount(x1)) & 1);
}

std::vector<Word> component_words(int k, std::uint64_t beta_bits) {
  int n = 2 * k + 1;
  std::vector<Word> out;
  out.reserve(1ull << k);
  for (std::uint64_t a = 0; a < (1ull << k); ++a) {
    std::uint64_t parity = static_cast<std::uint64_t>(std::popcount(a)) & 1;
    out.emplace_back(n, a | ((a ^ beta_bits) << k) | (parity << (n - 1)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ComponentSpec::ComponentSpec(int k_, const Word& beta_) : k(k_), beta(beta_), coordinate(2 * k_ + 1) {
  if (beta.length() != k) throw std::invalid_argument("beta length must equal k");
  if (2 * k + 1 > Word::kMaxLength) throw std::invalid_argument("component length exceeds 63");
  if (!canonical_hamming_contains(beta)) throw std::invalid_argument("beta is not a codeword of the canonical Hamming code");
}

CodeOracle linear_component(const ComponentSpec& spec) {
  int k = spec.k;
  int n = spec.coordinate;
  std::uint64_t beta_bits = spec.beta.bits();
  CodeOracle oracle;
  oracle.length = n;
  oracle.contains = [n, k, beta_bits](const Word& w) {
    if (w.length() != n) throw std::invalid_argument("word length does not match code length");
    return in_component(w.bits(), k, beta_bits);
  };
  oracle.cardinality = 1ull << k;
  if (k <= 15) oracle.enumerate = [k, beta_bits]() { return component_words(k, beta_bits); };
  return oracle;
}

CodeOracle switched_code(const ComponentSpec& spec) {
  int k = spec.k;
  int n = spec.coordinate;
  std::uint64_t beta_bits = spec.beta.bits();
  std::uint64_t e_n = 1ull << (n - 1);
  CodeOracle oracle;
  oracle.length = n;
  oracle.contains = [n, k, beta_bits, e_n](const Word& w) {
    if (w.length() != n) throw std::invalid_argument("word length does not match code length");
    if (in_component(w.bits() ^ e_n, k, beta_bits)) return true;  // switched copy
    return canonical_hamming_contains(w) && !in_component(w.bits(), k, beta_bits);
  };
  int t = std::countr_zero(static_cast<unsigned>(n) + 1);
  oracle.cardinality = 1ull << (n - t);
  if (k <= 7) {
    oracle.enumerate = [n, k, beta_bits, e_n]() {
      std::vector<Word> out;
      for (const Word& w : canonical_hamming(n).enumerate())
        if (!in_component(w.bits(), k, beta_bits)) out.push_back(w);
      for (const Word& w : component_words(k, beta_bits)) out.emplace_back(n, w.bits() ^ e_n);
      std::sort(out.begin(), out.end());
      return out;
    };
  }
  return oracle;
}

std::vector<Word> i_closure(const CodeOracle& code, int i, const Word& seed) {
  int n = code.length;
  if (n > 15) throw std::invalid_argument("closure computation is restricted to lengths <= 15");
  if (i < 1 || i > n) throw std::invalid_argument("coordinate out of range");
  if (!code.contains(seed)) throw std::invalid_argument("seed is not a codeword");

  std::unordered_set<std::uint64_t> seen{seed.bits()};
  std::deque<Word> frontier{seed};
  while (!frontier.empty()) {
    Word x = frontier.front();
    frontier.pop_front();
    // Neighbors differ in coordinate i and two others.
    for (int a = 1; a <= n; ++a) {
      if (a == i) continue;
      for (int b = a + 1; b <= n; ++b) {
        if (b == i) continue;
        std::uint64_t e = (1ull << (i - 1)) | (1ull << (a - 1)) | (1ull << (b - 1));
        Word y(n, x.bits() ^ e);
        if (seen.count(y.bits()) || !code.contains(y)) continue;
        seen.insert(y.bits());
        frontier.push_back(y);
      }
    }
  }
  std::vector<Word> out;
  out.reserve(seen.size());
  for (std::uint64_t bits : seen) out.emplace_back(n, bits);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CodeOracle> hamming_partition_into_components(int k) {
  if (k > 15) throw std::invalid_argument("component family materialization is restricted to k <= 15");
  std::vector<CodeOracle> out;
  for (const Word& beta : canonical_hamming(k).enumerate())
    out.push_back(linear_component(ComponentSpec(k, beta)));
  return out;
}

}  // namespace perfcodes
