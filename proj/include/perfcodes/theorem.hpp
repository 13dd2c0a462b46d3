#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "perfcodes/exact_cover.hpp"
#include "perfcodes/steiner.hpp"
#include "perfcodes/word.hpp"

namespace perfcodes {

enum class TheoremStatus { pass, fail, inconclusive };

const char* to_string(TheoremStatus status);

struct ExactCoverOutcome {
  std::uint64_t solutions = 0;
  std::uint64_t nodes = 0;
  SearchStatus status = SearchStatus::complete;
};

/// One translated scenario: the switched component R(beta_prime) + e_n could
/// hold a weight-3 word of a hypothetical distance-5 subcode. Each step flag
/// records one machine check of the refutation; `exact_cover` is present in
/// exhaustive mode and must report zero partitions with a complete search.
struct TheoremCase {
  Word beta_prime;
  std::array<Triple, 4> switched_supports{};  // weight-3 supports in R(beta_prime) + e_n
  Triple designated{};                        // support of beta_prime, the anchor triple
  bool counting = false;       // more codewords at distance 3 than fit in one component
  bool structure = false;      // the four supports pairwise intersect and avoid H_n
  bool swap_consistent = false;  // unswitched weight-3 words swap the anchor points and lie in H_n
  bool antipodal = false;        // H_n contains the all-ones word
  bool contradiction = false;    // the anchor-triple word is forced into H_n yet is absent
  std::optional<ExactCoverOutcome> exact_cover;

  bool steps_pass() const { return counting && structure && swap_consistent && antipodal && contradiction; }
};

struct TheoremCertificate {
  int t = 0;
  int n = 0;  // 4^t - 1
  int k = 0;  // (n - 1) / 2
  Word beta;
  std::string mode;  // "algebraic" or "exhaustive"
  std::vector<TheoremCase> cases;
  std::optional<ExactCoverOutcome> control;  // unconstrained partition search, exhaustive mode
  TheoremStatus overall_status = TheoremStatus::fail;

  nlohmann::json to_json() const;
};

/// The translated component labels that could host a weight-3 word: the
/// weight-3 members of the coset beta + H_k, which is H_k itself.
std::vector<Word> effective_betas(const Word& beta, int k);

/// The weight-3 words of R(beta_prime) + e_n. For a weight-3 beta_prime with
/// support {a,b,c} these are exactly four, with supports {a,b,c},
/// {a,b+k,c+k}, {b,a+k,c+k}, {c,a+k,b+k}; the closed form is cross-checked
/// against an independent filter before being returned.
std::vector<Word> weight3_words_of_switched_component(const Word& beta_prime, int k);

/// Certifies that the code obtained from H_n (n = 4^t - 1) by switching the
/// component R(beta) contains no subcode with the parameters
/// (n, 2^(n+1)/(n+1)^2, 5). Works through membership probes only, so n = 63
/// never enumerates H_63.
TheoremCertificate verify_theorem_algebraic(int t, const Word& beta);

/// Algebraic checks plus, per case, an exhaustive search for partitions of
/// the points outside the anchor triple into triples of the H_n neighborhood
/// system (none may exist), and one unconstrained control search (some must).
TheoremCertificate verify_theorem_exhaustive(int t, const Word& beta, std::uint64_t node_budget = kUnlimited);

/// Recomputes the overall status a serialized certificate must carry.
TheoremStatus revalidate_certificate(const nlohmann::json& certificate);

}  // namespace perfcodes
