#pragma once

#include <vector>

#include "perfcodes/oracle.hpp"
#include "perfcodes/word.hpp"

namespace perfcodes {

/// Identifies the linear component R(beta) = {(a, a + beta, |a|) : a in Q_k}
/// of the canonical Hamming code H_{2k+1}. `coordinate` is the parity
/// coordinate n = 2k+1, the one flipped when the component is switched.
struct ComponentSpec {
  int k = 0;
  Word beta;
  int coordinate = 0;

  ComponentSpec(int k, const Word& beta);
};

/// R(beta) as an oracle; enumerable for k <= 15, cardinality 2^k.
CodeOracle linear_component(const ComponentSpec& spec);

/// The perfect code (H_n \ R(beta)) + (R(beta) + e_n): the component is
/// removed and its translate by the parity coordinate unit vector is added.
CodeOracle switched_code(const ComponentSpec& spec);

/// Smallest subset of the code containing `seed` and closed under taking
/// codewords at distance 3 that differ in coordinate i. Restricted to
/// lengths <= 15.
std::vector<Word> i_closure(const CodeOracle& code, int i, const Word& seed);

/// The family {R(beta) : beta in H_k}, ordered by canonical order of beta.
/// Its members partition H_{2k+1}.
std::vector<CodeOracle> hamming_partition_into_components(int k);

}  // namespace perfcodes
