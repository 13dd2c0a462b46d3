// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each check is self-contained and enforces its own runtime bound.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "perfcodes/components.hpp"
#include "perfcodes/exact_cover.hpp"
#include "perfcodes/nordstrom_robinson.hpp"
#include "perfcodes/oracle.hpp"
#include "perfcodes/steiner.hpp"
#include "perfcodes/theorem.hpp"
#include "perfcodes/vasilev.hpp"

using namespace perfcodes;

namespace {

struct Criterion {
  const char* name;
  const char* description;
  std::function<bool(std::string&)> check;
  double time_limit_s;
};

bool a1_perfectness(std::string& detail) {
  bool ok = true;
  for (int n : {7, 15}) {
    PerfectnessReport r = verify_perfect(canonical_hamming(n));
    ok = ok && r.is_perfect && !r.sampled && r.words_checked == (1ull << n);
  }
  detail = "H_7 and H_15 tile their spaces (full scans of 128 and 32768 words)";
  return ok;
}

bool a2_vasilev_linear(std::string& detail) {
  CodeOracle v = vasilev(VasilevSpec::zero(7));
  bool perfect = verify_perfect(v).is_perfect;
  bool antipodal = verify_antipodal(v);
  bool matches = v.enumerate() == canonical_hamming(15).enumerate();
  bool size_ok = *v.cardinality == 2048;
  detail = "zero lambda reproduces the canonical H_15: perfect, antipodal, 2048 words";
  return perfect && antipodal && matches && size_ok;
}

bool a3_vasilev_nonlinear(std::string& detail) {
  VasilevSpec spec = VasilevSpec::zero(7);
  Word beta = Word::from_string("1100010");
  spec.lambda[beta.bits()] = 1;
  CodeOracle v = vasilev(spec);
  if (!verify_perfect(v).is_perfect) return false;
  Word u = concat(concat(Word::zero(7), beta), Word(1, 1));
  Word w = concat(concat(Word::zero(7), Word::from_string("0001110")), Word(1, 0));
  bool witness = v.contains(u) && v.contains(w) && !v.contains(u + w);
  detail = "lambda(1100010)=1 stays perfect but " + u.to_string() + " + " + w.to_string() +
           " leaves the code";
  return witness;
}

bool a4_switching(std::string& detail) {
  std::vector<Word> betas = canonical_hamming_weight3(7);
  if (betas.size() != 7) return false;
  for (const Word& beta : betas) {
    CodeOracle c = switched_code(ComponentSpec(7, beta));
    if (*c.cardinality != 2048) return false;
    if (!verify_perfect(c).is_perfect) return false;
    Word inside = concat(concat(Word::zero(7), beta), Word(1, 0));  // in R(beta), so in H_15 only
    if (c.contains(inside) || !canonical_hamming_contains(inside)) return false;
  }
  detail = "all 7 weight-3 switches of H_15 are perfect, 2048 words, distinct from H_15";
  return true;
}

bool a5_sts(std::string& detail) {
  TripleSystem ts = neighborhood_sts(canonical_hamming(15), Word::zero(15));
  detail = "neighborhood system of H_15 at zero has 35 triples and is a Steiner system";
  return ts.triples.size() == 35 && validate_sts(ts);
}

bool a6_nordstrom_robinson(std::string& detail) {
  std::vector<Word> extended;
  for (const QuaternaryWord& q : octacode_words()) extended.push_back(gray_map(q));
  NRCode code = nordstrom_robinson();
  bool pre = min_pairwise_distance(extended) == 6;
  bool size_ok = code.words.size() == 256;
  bool dist = min_pairwise_distance(code.words) == 5;
  detail = "Gray image has distance 6 before puncturing; punctured code is a (15, 256, 5)";
  return pre && size_ok && dist && verify_preparata_parameters(code.words, 15);
}

bool a7_enclosing(std::string& detail) {
  NRCode code = nordstrom_robinson();
  LinearCode enclosing = enclosing_hamming(code);
  bool contains_all = true;
  for (const Word& w : code.words) contains_all = contains_all && enclosing.contains(w);
  detail = "span of the NR code is a perfect (15, 2048, 3) containing all 256 NR words";
  return enclosing.size() == 2048 && enclosing.min_distance() == 3 && contains_all &&
         verify_perfect(oracle_from_linear(enclosing)).is_perfect;
}

bool a8_partition_condition(std::string& detail) {
  NRCode nr = nordstrom_robinson();
  CodeOracle code = oracle_from_linear(enclosing_hamming(nr));
  CodeOracle sub = oracle_from_words(15, nr.words);
  int outside = 0;
  for (const Word& alpha : code.enumerate()) {
    if (sub.contains(alpha)) continue;
    ++outside;
    PartitionConditionReport r = preparata_partition_condition(code, nr.words, alpha);
    if (!r.holds || r.triples.triples.size() != 5) return false;
  }
  detail = "all 1792 enclosing-code words outside NR see 5 disjoint triples covering 1..15";
  return outside == 1792;
}

bool a9_traces(std::string& detail) {
  NRCode code = nordstrom_robinson();
  LinearCode enclosing = enclosing_hamming(code);
  std::vector<TransportedComponent> components = transported_components(enclosing);
  if (components.size() != 16) return false;
  for (const TransportedComponent& tc : components) {
    TraceReport r = component_trace_check(code, tc.words);
    bool regular = r.degree_histogram.size() == 1 && r.degree_histogram.count(7) == 1 &&
                   r.degree_histogram.at(7) == 128;
    if (r.trace_size != 16 || !r.is_perfect_in_graph || !regular) return false;
  }
  detail = "NR meets each of the 16 components in a 16-word perfect set of the 7-regular graph";
  return true;
}

bool a10_theorem_n15(std::string& detail) {
  for (const Word& beta : canonical_hamming_weight3(7)) {
    TheoremCertificate alg = verify_theorem_algebraic(2, beta);
    if (alg.overall_status != TheoremStatus::pass || alg.cases.size() != 7) return false;
    TheoremCertificate exh = verify_theorem_exhaustive(2, beta);
    if (exh.overall_status != TheoremStatus::pass) return false;
    for (const TheoremCase& c : exh.cases)
      if (!c.exact_cover || c.exact_cover->status != SearchStatus::complete ||
          c.exact_cover->solutions != 0)
        return false;
    if (!exh.control || exh.control->status != SearchStatus::complete || exh.control->solutions == 0)
      return false;
  }
  detail = "both modes pass for every weight-3 beta of H_7; searches complete with 0 hits, control finds partitions";
  return true;
}

bool a11_theorem_n63(std::string& detail) {
  Word beta = canonical_hamming_weight3(31).front();
  TheoremCertificate cert = verify_theorem_algebraic(3, beta);
  std::ostringstream text;
  text << "algebraic pass at n = 63 for beta " << beta.to_string() << " across "
       << cert.cases.size() << " cases";
  detail = text.str();
  return cert.overall_status == TheoremStatus::pass && cert.cases.size() == 155;
}

bool metric_axioms() {
  std::vector<Word> words;
  for (std::uint64_t v = 0; v < 32; ++v) words.push_back(Word(5, v));
  for (const Word& a : words)
    for (const Word& b : words) {
      if (distance(a, b) != distance(b, a)) return false;
      if ((distance(a, b) == 0) != (a == b)) return false;
      for (const Word& c : words)
        if (distance(a, c) > distance(a, b) + distance(b, c)) return false;
    }
  return true;
}

Word component_word(int k, const Word& beta, std::uint64_t alpha) {
  Word a(k, alpha);
  return concat(concat(a, a + beta), Word(1, a.weight() & 1));
}

bool translation_lemma() {
  for (const Word& beta : canonical_hamming(3).enumerate())
    for (const Word& delta : canonical_hamming(3).enumerate()) {
      CodeOracle target = linear_component(ComponentSpec(3, beta + delta));
      for (std::uint64_t y = 0; y < 8; ++y)
        for (std::uint64_t a = 0; a < 8; ++a)
          if (!target.contains(component_word(3, beta, a) + component_word(3, delta, y)))
            return false;
    }
  std::mt19937_64 rng(2026);
  std::vector<Word> h7 = canonical_hamming(7).enumerate();
  for (int trial = 0; trial < 120; ++trial) {
    Word beta = h7[rng() % h7.size()];
    Word delta = h7[rng() % h7.size()];
    Word moved = component_word(7, beta, rng() & 127) + component_word(7, delta, rng() & 127);
    if (!linear_component(ComponentSpec(7, beta + delta)).contains(moved)) return false;
  }
  return true;
}

bool exact_cover_equivalence() {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    ExactCoverInstance instance;
    int n = 4 + static_cast<int>(rng() % 9);  // 4..12 points
    for (int p = 1; p <= n; ++p) instance.universe.push_back(p);
    int m = 5 + static_cast<int>(rng() % 10);
    for (int i = 0; i < m; ++i) {
      std::vector<int> subset;
      for (int p = 1; p <= n; ++p)
        if (rng() % 3 == 0) subset.push_back(p);
      if (subset.empty()) subset.push_back(1 + static_cast<int>(rng() % n));
      instance.subsets.push_back(subset);
    }

    std::set<std::vector<std::size_t>> reference;
    for (std::uint64_t pick = 0; pick < (1ull << m); ++pick) {
      std::set<int> covered;
      std::vector<std::size_t> chosen;
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        if (!((pick >> i) & 1)) continue;
        chosen.push_back(static_cast<std::size_t>(i));
        for (int p : instance.subsets[static_cast<std::size_t>(i)]) ok = covered.insert(p).second && ok;
      }
      if (ok && covered == std::set<int>(instance.universe.begin(), instance.universe.end()))
        reference.insert(chosen);
    }

    ExactCoverResult result = solve_exact_cover(instance);
    if (result.status != SearchStatus::complete) return false;
    if (std::set<std::vector<std::size_t>>(result.solutions.begin(), result.solutions.end()) != reference)
      return false;
  }
  return true;
}

bool oracle_enumerator_agreement() {
  std::vector<CodeOracle> codes;
  for (int n : {1, 3, 7, 15}) codes.push_back(canonical_hamming(n));
  VasilevSpec spec = VasilevSpec::zero(7);
  spec.lambda[Word::from_string("1010100").bits()] = 1;
  codes.push_back(vasilev(spec));
  codes.push_back(switched_code(ComponentSpec(7, Word::from_string("0111000"))));
  for (const CodeOracle& code : codes) {
    std::vector<Word> words = code.enumerate();
    std::unordered_set<std::uint64_t> members;
    for (const Word& w : words) members.insert(w.bits());
    if (members.size() != words.size()) return false;
    for (std::uint64_t v = 0; v < (1ull << code.length); ++v)
      if (code.contains(Word(code.length, v)) != (members.count(v) == 1)) return false;
  }
  return true;
}

bool a12_property_suites(std::string& detail) {
  bool metric = metric_axioms();
  bool translation = translation_lemma();
  bool cover = exact_cover_equivalence();
  bool oracle = oracle_enumerator_agreement();
  detail = "metric axioms, component translation lemma, exact-cover cross-check, oracle agreement";
  return metric && translation && cover && oracle;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"A01", "exhaustive perfectness of H_7 and H_15", a1_perfectness, 2.0},
      {"A02", "Vasilev with zero lambda is the canonical H_15", a2_vasilev_linear, 10.0},
      {"A03", "a nonzero lambda gives a perfect nonlinear code", a3_vasilev_nonlinear, 10.0},
      {"A04", "the 7 weight-3 switches of H_15 are perfect", a4_switching, 10.0},
      {"A05", "neighborhood Steiner system of H_15", a5_sts, 10.0},
      {"A06", "Nordstrom-Robinson is a (15, 256, 5)", a6_nordstrom_robinson, 1.0},
      {"A07", "enclosing perfect code contains NR", a7_enclosing, 10.0},
      {"A08", "partition condition over all 1792 cosets", a8_partition_condition, 30.0},
      {"A09", "NR traces on all 16 components", a9_traces, 30.0},
      {"A10", "theorem verification at n = 15, both modes, all betas", a10_theorem_n15, 60.0},
      {"A11", "theorem verification at n = 63, algebraic", a11_theorem_n63, 300.0},
      {"A12", "property suites", a12_property_suites, 60.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    double seconds = 0.0;
    try {
      auto start = std::chrono::steady_clock::now();
      ok = c.check(detail);
      seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (seconds > c.time_limit_s) {
        ok = false;
        detail += " [exceeded time limit]";
      }
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("%s %s: %s - %s (%.2f s)\n", c.name, ok ? "PASS" : "FAIL", c.description,
                detail.c_str(), seconds);
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
