#pragma once

#include <cstdint>
#include <unordered_map>

#include "json.hpp"
#include "perfcodes/gf2.hpp"
#include "perfcodes/oracle.hpp"
#include "perfcodes/word.hpp"

namespace perfcodes {

/// Membership in the canonical Hamming family H_n, defined recursively:
/// H_1 = {0}, and w = (x1, x2, x3) of length 2k+1 lies in H_{2k+1} exactly
/// when x1 + x2 lies in H_k and the final coordinate x3 equals the parity of
/// x1. This presentation differs from hamming_code(t) as a set; it is the
/// one every component and switching operation here refers to.
bool canonical_hamming_contains(const Word& w);

/// Parity-check matrix of the recursive family, built by the same recursion:
/// rows (h, h, 0) for each row h of the length-k matrix, plus (1...1, 0...0, 1).
BitMatrix canonical_hamming_check_matrix(int n);

LinearCode canonical_hamming_code(int n);

/// Oracle for H_n; enumerable for n <= 15.
CodeOracle canonical_hamming(int n);

/// Weight-3 codewords of H_k in canonical order. Found by enumeration for
/// k <= 7 and by parity-check column solving for larger k (a pair of columns
/// determines the third).
std::vector<Word> canonical_hamming_weight3(int k);

/// Parameters of the construction {(a, a + b, |a| + lambda(b))} over all
/// a in Q_k and codewords b of `base`. lambda defaults to 0 where unset.
struct VasilevSpec {
  int k = 0;
  LinearCode base;
  std::unordered_map<std::uint64_t, std::uint8_t> lambda;

  int lambda_of(const Word& beta) const {
    auto it = lambda.find(beta.bits());
    return it == lambda.end() ? 0 : it->second;
  }

  /// Canonical base with lambda identically zero; yields H_{2k+1} itself.
  static VasilevSpec zero(int k);

  /// Accepts {"k": int, "lambda": {"<word>": 0|1}}; omitted entries are 0 and
  /// keys must be codewords of the canonical base.
  static VasilevSpec from_json(const nlohmann::json& j);
};

/// Perfect code of length 2k+1 built from the spec; enumerable for lengths
/// up to 15.
CodeOracle vasilev(const VasilevSpec& spec);

}  // namespace perfcodes
