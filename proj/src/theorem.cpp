#include "perfcodes/theorem.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "perfcodes/components.hpp"
#include "perfcodes/vasilev.hpp"

namespace perfcodes {

namespace {

struct CaseGeometry {
  int k = 0;
  int n = 0;
  Word beta_prime;
  std::uint64_t e_n = 0;

  Word component_word(std::uint64_t alpha, bool switched) const {
    std::uint64_t parity = static_cast<std::uint64_t>(std::popcount(alpha)) & 1;
    std::uint64_t bits = alpha | ((alpha ^ beta_prime.bits()) << k) | (parity << (n - 1));
    return Word(n, switched ? bits ^ e_n : bits);
  }
};

// Weight-3 words of R(beta_prime) (+ e_n when switched), filtered
// independently of the closed form. A weight-3 word exposes its first k
// coordinates as alpha, so wt(alpha) <= 3; for k <= 7 the whole component is
// scanned instead.
std::vector<Word> filter_weight3(const CaseGeometry& g, bool switched) {
  std::vector<Word> out;
  if (g.k <= 7) {
    for (std::uint64_t a = 0; a < (1ull << g.k); ++a) {
      Word w = g.component_word(a, switched);
      if (w.weight() == 3) out.push_back(w);
    }
  } else {
    std::vector<std::uint64_t> alphas{0};
    for (int i = 0; i < g.k; ++i) {
      alphas.push_back(1ull << i);
      for (int j = i + 1; j < g.k; ++j) {
        alphas.push_back((1ull << i) | (1ull << j));
        for (int l = j + 1; l < g.k; ++l) alphas.push_back((1ull << i) | (1ull << j) | (1ull << l));
      }
    }
    for (std::uint64_t a : alphas) {
      Word w = g.component_word(a, switched);
      if (w.weight() == 3) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Triple support_triple(const Word& w) {
  std::vector<int> s = w.support();
  if (s.size() != 3) throw std::logic_error("expected a weight-3 word");
  return Triple{s[0], s[1], s[2]};
}

struct SwitchedAnalysis {
  std::vector<Word> words;                  // closed form, sorted
  std::array<Triple, 4> supports{};         // pattern order: anchor first
  Triple designated{};
  bool consistent = false;                  // closed form matches the filter
};

SwitchedAnalysis analyze_switched(const Word& beta_prime, int k) {
  CaseGeometry g{k, 2 * k + 1, beta_prime, 1ull << (2 * k)};
  SwitchedAnalysis a;
  std::vector<Word> filtered = filter_weight3(g, true);
  if (beta_prime.weight() != 3) {
    a.consistent = filtered.empty();
    return a;
  }
  // alpha in {beta_prime, e_a, e_b, e_c} are the only producers of weight 3:
  // anything else leaves weight above 3 on the two halves.
  Triple abc = support_triple(beta_prime);
  a.designated = abc;
  a.words.push_back(g.component_word(beta_prime.bits(), true));
  for (int p : abc) a.words.push_back(g.component_word(1ull << (p - 1), true));
  a.supports = {Triple{abc[0], abc[1], abc[2]},
                Triple{abc[0], abc[1] + k, abc[2] + k},
                Triple{abc[1], abc[0] + k, abc[2] + k},
                Triple{abc[2], abc[0] + k, abc[1] + k}};
  std::vector<Word> sorted = a.words;
  std::sort(sorted.begin(), sorted.end());
  a.consistent = sorted == filtered;
  for (std::size_t i = 0; i < 4 && a.consistent; ++i)
    if (support_triple(a.words[i]) != a.supports[i]) a.consistent = false;
  std::sort(a.words.begin(), a.words.end());
  return a;
}

// Weight-3 words of the unswitched R(beta_prime): supports {a,b,c+k},
// {a,c,b+k}, {b,c,a+k} and {a+k,b+k,c+k}, produced by alpha in
// {e_a+e_b, e_a+e_c, e_b+e_c, 0}.
struct UnswitchedAnalysis {
  std::vector<Word> words;
  std::array<Triple, 4> supports{};
  bool consistent = false;
};

UnswitchedAnalysis analyze_unswitched(const Word& beta_prime, int k) {
  CaseGeometry g{k, 2 * k + 1, beta_prime, 1ull << (2 * k)};
  UnswitchedAnalysis a;
  std::vector<Word> filtered = filter_weight3(g, false);
  if (beta_prime.weight() != 3) {
    a.consistent = filtered.empty();
    return a;
  }
  Triple abc = support_triple(beta_prime);
  a.words.push_back(g.component_word((1ull << (abc[0] - 1)) | (1ull << (abc[1] - 1)), false));
  a.words.push_back(g.component_word((1ull << (abc[0] - 1)) | (1ull << (abc[2] - 1)), false));
  a.words.push_back(g.component_word((1ull << (abc[1] - 1)) | (1ull << (abc[2] - 1)), false));
  a.words.push_back(g.component_word(0, false));
  a.supports = {Triple{abc[0], abc[1], abc[2] + k},
                Triple{abc[0], abc[2], abc[1] + k},
                Triple{abc[1], abc[2], abc[0] + k},
                Triple{abc[0] + k, abc[1] + k, abc[2] + k}};
  std::vector<Word> sorted = a.words;
  std::sort(sorted.begin(), sorted.end());
  a.consistent = sorted == filtered;
  for (std::size_t i = 0; i < 4 && a.consistent; ++i)
    if (support_triple(a.words[i]) != a.supports[i]) a.consistent = false;
  std::sort(a.words.begin(), a.words.end());
  return a;
}

bool triples_intersect(const Triple& x, const Triple& y) {
  for (int p : x)
    for (int q : y)
      if (p == q) return true;
  return false;
}

void check_theorem_arguments(int t, const Word& beta, int& n, int& k) {
  if (t < 2) throw std::invalid_argument("t must be at least 2: the length must be 4^t - 1, not 2^odd - 1");
  n = (1 << (2 * t)) - 1;
  if (n > Word::kMaxLength) throw std::invalid_argument("length 4^t - 1 exceeds 63");
  k = (n - 1) / 2;
  if (beta.length() != k) throw std::invalid_argument("beta must have length (n - 1) / 2");
  if (!canonical_hamming_contains(beta)) throw std::invalid_argument("beta is not a codeword of the canonical Hamming code");
}

TheoremCase build_case(const Word& beta_prime, int t, bool exhaustive, const TripleSystem& sts,
                       std::uint64_t node_budget) {
  int n = (1 << (2 * t)) - 1;
  int k = (n - 1) / 2;
  TheoremCase c;
  c.beta_prime = beta_prime;

  SwitchedAnalysis sw = analyze_switched(beta_prime, k);
  UnswitchedAnalysis un = analyze_unswitched(beta_prime, k);
  c.switched_supports = sw.supports;
  c.designated = sw.designated;

  CodeOracle switched = switched_code(ComponentSpec(k, beta_prime));
  CodeOracle component = linear_component(ComponentSpec(k, beta_prime));
  Word zero = Word::zero(n);
  Word ones = Word::ones(n);
  Word e_n = Word::unit(n, n);
  Word anchor = sw.words.empty() ? zero : Word(n, beta_prime.bits());  // support = designated triple

  // Counting: the hypothetical weight-3 word has n(n-1)/6 codewords at
  // distance 3 around it but at most (n-1)/2 inside its own component, and
  // the zero word witnesses one outside.
  std::uint64_t d3 = static_cast<std::uint64_t>(n) * (n - 1) / 6;
  c.counting = d3 > static_cast<std::uint64_t>((n - 1) / 2) && !sw.words.empty() &&
               component.contains(anchor + e_n) && switched.contains(anchor) && switched.contains(zero) &&
               !component.contains(zero + e_n) && distance(anchor, zero) == 3;

  // Structure: exactly four weight-3 words, supports in the closed-form
  // pattern, pairwise intersecting (no two fit into one partition), all in
  // the switched code and none in H_n.
  c.structure = sw.consistent && sw.words.size() == 4;
  if (c.structure) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (!triples_intersect(sw.supports[i], sw.supports[j])) c.structure = false;
    for (const Word& w : sw.words)
      if (canonical_hamming_contains(w) || !switched.contains(w)) c.structure = false;
  }

  // Swap: removing the switch turns the four supports into their partners
  // across the anchor triple, and those words all lie in H_n.
  c.swap_consistent = un.consistent && un.words.size() == 4;
  if (c.swap_consistent)
    for (const Word& w : un.words)
      if (!canonical_hamming_contains(w) || !component.contains(w)) c.swap_consistent = false;

  c.antipodal = canonical_hamming_contains(ones) && canonical_hamming_contains(zero);

  // Contradiction: a partition holding the anchor triple would sum, with the
  // all-ones word, to the anchor word itself, forcing it into H_n by
  // linearity; yet it is not there.
  Word complement = ones + anchor;
  c.contradiction = !canonical_hamming_contains(anchor) && (ones + complement) == anchor &&
                    support_triple(ones + complement) == c.designated;

  if (exhaustive) {
    PartitionConstraints constraints;
    constraints.excluded_points = {c.designated[0], c.designated[1], c.designated[2]};
    PartitionSearchResult search = find_triple_partitions(sts, constraints, kUnlimited, node_budget);
    c.exact_cover = ExactCoverOutcome{search.partitions.size(), search.nodes_visited, search.status};
  }
  return c;
}

TheoremStatus combine_status(const std::vector<TheoremCase>& cases, const std::optional<ExactCoverOutcome>& control) {
  bool inconclusive = false;
  for (const TheoremCase& c : cases) {
    if (!c.steps_pass()) return TheoremStatus::fail;
    if (c.exact_cover) {
      if (c.exact_cover->status == SearchStatus::complete && c.exact_cover->solutions > 0) return TheoremStatus::fail;
      if (c.exact_cover->status == SearchStatus::budget_exhausted) inconclusive = true;
    }
  }
  if (control) {
    // The control search must be able to produce at least one partition.
    if (control->solutions == 0) {
      if (control->status == SearchStatus::complete) return TheoremStatus::fail;
      inconclusive = true;
    }
  }
  return inconclusive ? TheoremStatus::inconclusive : TheoremStatus::pass;
}

TheoremCertificate run_verifier(int t, const Word& beta, bool exhaustive, std::uint64_t node_budget) {
  TheoremCertificate cert;
  check_theorem_arguments(t, beta, cert.n, cert.k);
  cert.t = t;
  cert.beta = beta;
  cert.mode = exhaustive ? "exhaustive" : "algebraic";

  TripleSystem sts;
  if (exhaustive) sts = neighborhood_sts(canonical_hamming(cert.n), Word::zero(cert.n));

  for (const Word& beta_prime : effective_betas(beta, cert.k))
    cert.cases.push_back(build_case(beta_prime, t, exhaustive, sts, node_budget));

  if (exhaustive) {
    PartitionSearchResult control = find_triple_partitions(sts, PartitionConstraints{}, kUnlimited, node_budget);
    cert.control = ExactCoverOutcome{control.partitions.size(), control.nodes_visited, control.status};
  }
  cert.overall_status = combine_status(cert.cases, cert.control);
  return cert;
}

nlohmann::json outcome_json(const ExactCoverOutcome& o) {
  return {{"solutions", o.solutions}, {"nodes", o.nodes}, {"status", to_string(o.status)}};
}

}  // namespace

const char* to_string(TheoremStatus status) {
  switch (status) {
    case TheoremStatus::pass: return "pass";
    case TheoremStatus::fail: return "fail";
    default: return "inconclusive";
  }
}

std::vector<Word> effective_betas(const Word& beta, int k) {
  if (beta.length() != k) throw std::invalid_argument("beta length must equal k");
  if (!canonical_hamming_contains(beta)) throw std::invalid_argument("beta is not a codeword of the canonical Hamming code");
  // The coset beta + H_k is H_k, so the weight-3 members do not depend on beta.
  return canonical_hamming_weight3(k);
}

std::vector<Word> weight3_words_of_switched_component(const Word& beta_prime, int k) {
  if (beta_prime.length() != k) throw std::invalid_argument("beta length must equal k");
  if (!canonical_hamming_contains(beta_prime))
    throw std::invalid_argument("beta is not a codeword of the canonical Hamming code");
  SwitchedAnalysis a = analyze_switched(beta_prime, k);
  if (!a.consistent) throw std::logic_error("closed-form weight-3 words disagree with the component filter");
  return a.words;
}

TheoremCertificate verify_theorem_algebraic(int t, const Word& beta) { return run_verifier(t, beta, false, kUnlimited); }

TheoremCertificate verify_theorem_exhaustive(int t, const Word& beta, std::uint64_t node_budget) {
  return run_verifier(t, beta, true, node_budget);
}

nlohmann::json TheoremCertificate::to_json() const {
  nlohmann::json j;
  j["t"] = t;
  j["n"] = n;
  j["beta"] = beta.to_string();
  j["mode"] = mode;
  j["cases"] = nlohmann::json::array();
  for (const TheoremCase& c : cases) {
    nlohmann::json jc;
    jc["beta_prime"] = c.beta_prime.to_string();
    jc["supports"] = nlohmann::json::array();
    for (const Triple& s : c.switched_supports) jc["supports"].push_back({s[0], s[1], s[2]});
    jc["ijk"] = {c.designated[0], c.designated[1], c.designated[2]};
    jc["steps"] = {{"counting", c.counting},
                   {"structure", c.structure},
                   {"swap", c.swap_consistent},
                   {"antipodal", c.antipodal},
                   {"contradiction", c.contradiction}};
    jc["exact_cover"] = c.exact_cover ? outcome_json(*c.exact_cover) : nlohmann::json();
    j["cases"].push_back(jc);
  }
  j["control"] = control ? outcome_json(*control) : nlohmann::json();
  j["overall_status"] = to_string(overall_status);
  return j;
}

TheoremStatus revalidate_certificate(const nlohmann::json& certificate) {
  int t = certificate.at("t").get<int>();
  int n = certificate.at("n").get<int>();
  if (t < 2 || n != (1 << (2 * t)) - 1) return TheoremStatus::fail;

  auto parse_outcome = [](const nlohmann::json& j) {
    ExactCoverOutcome o;
    o.solutions = j.at("solutions").get<std::uint64_t>();
    o.nodes = j.at("nodes").get<std::uint64_t>();
    std::string s = j.at("status").get<std::string>();
    if (s != "complete" && s != "budget_exhausted") throw std::invalid_argument("unknown search status");
    o.status = s == "complete" ? SearchStatus::complete : SearchStatus::budget_exhausted;
    return o;
  };

  std::vector<TheoremCase> cases;
  for (const nlohmann::json& jc : certificate.at("cases")) {
    TheoremCase c;
    const nlohmann::json& steps = jc.at("steps");
    c.counting = steps.at("counting").get<bool>();
    c.structure = steps.at("structure").get<bool>();
    c.swap_consistent = steps.at("swap").get<bool>();
    c.antipodal = steps.at("antipodal").get<bool>();
    c.contradiction = steps.at("contradiction").get<bool>();
    if (!jc.at("exact_cover").is_null()) c.exact_cover = parse_outcome(jc.at("exact_cover"));
    cases.push_back(c);
  }
  std::optional<ExactCoverOutcome> control;
  if (certificate.contains("control") && !certificate.at("control").is_null())
    control = parse_outcome(certificate.at("control"));
  return combine_status(cases, control);
}

}  // namespace perfcodes
