#include "perfcodes/vasilev.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace perfcodes {

namespace {

bool is_power_of_two_minus_one(int n) { return n >= 1 && std::has_single_bit(static_cast<unsigned>(n) + 1); }

void check_hamming_length(int n) {
  if (!is_power_of_two_minus_one(n) || n > Word::kMaxLength)
    throw std::invalid_argument("length must be 2^t - 1 and at most 63");
}

}  // namespace

bool canonical_hamming_contains(const Word& w) {
  check_hamming_length(w.length());
  std::uint64_t bits = w.bits();
  int n = w.length();
  // Unrolled recursion: check the parity coordinate, then descend into the
  // GF(2) sum of the two halves.
  while (n > 1) {
    int k = (n - 1) / 2;
    std::uint64_t x1 = bits & Word::mask(k);
    std::uint64_t x2 = (bits >> k) & Word::mask(k);
    std::uint64_t x3 = (bits >> (n - 1)) & 1;
    if (x3 != (static_cast<std::uint64_t>(std::popcount(x1)) & 1)) return false;
    bits = x1 ^ x2;
    n = k;
  }
  return bits == 0;
}

BitMatrix canonical_hamming_check_matrix(int n) {
  check_hamming_length(n);
  if (n == 1) return BitMatrix::from_rows(1, {1});
  int k = (n - 1) / 2;
  BitMatrix inner = canonical_hamming_check_matrix(k);
  BitMatrix out(0, n);
  for (int r = 1; r <= inner.rows(); ++r) {
    std::uint64_t h = inner.row_bits(r);
    out.append_row(h | (h << k));
  }
  out.append_row(Word::mask(k) | (1ull << (n - 1)));
  return out;
}

LinearCode canonical_hamming_code(int n) {
  return LinearCode::from_parity_check(canonical_hamming_check_matrix(n));
}

CodeOracle canonical_hamming(int n) {
  check_hamming_length(n);
  CodeOracle oracle;
  oracle.length = n;
  oracle.contains = [n](const Word& w) {
    if (w.length() != n) throw std::invalid_argument("word length does not match code length");
    return canonical_hamming_contains(w);
  };
  int t = std::countr_zero(static_cast<unsigned>(n) + 1);
  oracle.cardinality = 1ull << (n - t);
  if (n <= 15) {
    oracle.enumerate = [n]() {
      std::vector<Word> words = canonical_hamming_code(n).codewords();
      std::sort(words.begin(), words.end());
      return words;
    };
  }
  return oracle;
}

std::vector<Word> canonical_hamming_weight3(int k) {
  check_hamming_length(k);
  std::vector<Word> out;
  if (k <= 7) {
    for (const Word& c : canonical_hamming_code(k).codewords())
      if (c.weight() == 3) out.push_back(c);
  } else {
    // A weight-3 codeword corresponds to three parity-check columns summing
    // to zero, so each column pair determines the third.
    BitMatrix h = canonical_hamming_check_matrix(k);
    std::vector<int> index_of(1ull << h.rows(), 0);
    for (int j = 1; j <= k; ++j) index_of[h.column_value(j)] = j;
    for (int a = 1; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b) {
        int c = index_of[h.column_value(a) ^ h.column_value(b)];
        if (c > b) out.push_back(Word::unit(k, a) + Word::unit(k, b) + Word::unit(k, c));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VasilevSpec VasilevSpec::zero(int k) {
  check_hamming_length(k);
  VasilevSpec spec;
  spec.k = k;
  spec.base = canonical_hamming_code(k);
  return spec;
}

VasilevSpec VasilevSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.at("k").is_number_integer())
    throw std::invalid_argument("spec must be an object with an integer field \"k\"");
  VasilevSpec spec = zero(j.at("k").get<int>());
  if (j.contains("lambda")) {
    const nlohmann::json& table = j.at("lambda");
    if (!table.is_object()) throw std::invalid_argument("\"lambda\" must map codewords to 0 or 1");
    for (auto it = table.begin(); it != table.end(); ++it) {
      Word beta = Word::from_string(it.key());
      if (beta.length() != spec.k || !spec.base.contains(beta))
        throw std::invalid_argument("lambda key \"" + it.key() + "\" is not a base codeword");
      int v = it.value().is_number_integer() ? it.value().get<int>() : -1;
      if (v != 0 && v != 1) throw std::invalid_argument("lambda values must be 0 or 1");
      spec.lambda[beta.bits()] = static_cast<std::uint8_t>(v);
    }
  }
  return spec;
}

CodeOracle vasilev(const VasilevSpec& spec) {
  if (spec.base.length() != spec.k) throw std::invalid_argument("base length must equal k");
  int k = spec.k;
  int n = 2 * k + 1;
  if (n > Word::kMaxLength) throw std::invalid_argument("resulting length exceeds 63");
  for (const auto& [bits, value] : spec.lambda) {
    if (value > 1) throw std::invalid_argument("lambda values must be 0 or 1");
    if (!spec.base.contains(Word(k, bits)))
      throw std::invalid_argument("lambda keys must be base codewords");
  }
  LinearCode base = spec.base;
  auto lambda = spec.lambda;
  auto lambda_of = [lambda](std::uint64_t bits) -> std::uint64_t {
    auto it = lambda.find(bits);
    return it == lambda.end() ? 0 : it->second;
  };

  CodeOracle oracle;
  oracle.length = n;
  oracle.contains = [n, k, base, lambda_of](const Word& w) {
    if (w.length() != n) throw std::invalid_argument("word length does not match code length");
    std::uint64_t x1 = w.bits() & Word::mask(k);
    std::uint64_t x2 = (w.bits() >> k) & Word::mask(k);
    std::uint64_t x3 = (w.bits() >> (n - 1)) & 1;
    Word beta(k, x1 ^ x2);
    if (!base.contains(beta)) return false;
    return x3 == ((static_cast<std::uint64_t>(std::popcount(x1)) + lambda_of(beta.bits())) & 1);
  };
  oracle.cardinality = (1ull << k) * base.size();
  if (n <= 15) {
    oracle.enumerate = [n, k, base, lambda_of]() {
      std::vector<Word> out;
      out.reserve((1ull << k) * base.size());
      for (const Word& beta : base.codewords())
        for (std::uint64_t a = 0; a < (1ull << k); ++a) {
          std::uint64_t parity = (static_cast<std::uint64_t>(std::popcount(a)) + lambda_of(beta.bits())) & 1;
          out.emplace_back(n, a | ((a ^ beta.bits()) << k) | (parity << (n - 1)));
        }
      std::sort(out.begin(), out.end());
      return out;
    };
  }
  return oracle;
}

}  // namespace perfcodes
