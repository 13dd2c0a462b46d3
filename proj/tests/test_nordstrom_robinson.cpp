#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "perfcodes/nordstrom_robinson.hpp"
#include "perfcodes/oracle.hpp"
#include "perfcodes/steiner.hpp"
#include "perfcodes/vasilev.hpp"

using namespace perfcodes;

TEST_CASE("octacode basics") {
  std::vector<QuaternaryWord> words = octacode_words();
  CHECK(words.size() == 256);
  CHECK(std::find(words.begin(), words.end(), QuaternaryWord{}) != words.end());

  // closed under addition (spot checks)
  std::mt19937_64 rng(3);
  std::vector<QuaternaryWord> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  for (int trial = 0; trial < 200; ++trial) {
    QuaternaryWord a = words[rng() % words.size()];
    QuaternaryWord b = words[rng() % words.size()];
    CHECK(std::binary_search(sorted.begin(), sorted.end(), a + b));
  }

  // the documented generator rows: cyclic shifts of 3+x+2x^2+x^3 plus a parity symbol
  std::vector<QuaternaryWord> rows = {QuaternaryWord{{3, 1, 2, 1, 0, 0, 0, 1}},
                                      QuaternaryWord{{0, 3, 1, 2, 1, 0, 0, 1}},
                                      QuaternaryWord{{0, 0, 3, 1, 2, 1, 0, 1}},
                                      QuaternaryWord{{0, 0, 0, 3, 1, 2, 1, 1}}};
  for (const QuaternaryWord& row : rows)
    CHECK(std::binary_search(sorted.begin(), sorted.end(), row));
}

TEST_CASE("gray map expands symbols to pairs") {
  // 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10 read left to right per symbol
  QuaternaryWord q{};
  q.symbols = {0, 1, 2, 3, 0, 0, 0, 0};
  Word image = gray_map(q);
  CHECK(image.length() == 16);
  CHECK(image.to_string() == "0001111000000000");

  // distance between gray images of u and u+1 per symbol equals 1 (Lee-to-Hamming)
  QuaternaryWord zero{};
  for (std::uint8_t s = 0; s < 4; ++s) {
    QuaternaryWord u{};
    u.symbols[0] = s;
    QuaternaryWord v{};
    v.symbols[0] = (s + 1) % 4;
    CHECK(distance(gray_map(u), gray_map(v)) == 1);
  }
  CHECK(distance(gray_map(zero), gray_map(QuaternaryWord{{2, 0, 0, 0, 0, 0, 0, 0}})) == 2);
}

TEST_CASE("nordstrom-robinson parameters") {
  NRCode code = nordstrom_robinson();
  CHECK(code.words.size() == 256);
  CHECK(code.origin_included);
  CHECK(std::is_sorted(code.words.begin(), code.words.end()));
  CHECK(code.words.front() == Word::zero(15));
  for (const Word& w : code.words) CHECK(w.length() == 15);
  CHECK(min_pairwise_distance(code.words) == 5);

  // distance invariance at a few centers: weight enumerator 1,0,...,42 at 5...
  std::map<int, int> weights;
  for (const Word& w : code.words) ++weights[w.weight()];
  CHECK(weights[0] == 1);
  CHECK(weights[5] == 42);
  CHECK(weights[6] == 70);
  CHECK(weights[7] == 15);
  CHECK(weights[8] == 15);
  CHECK(weights[9] == 70);
  CHECK(weights[10] == 42);
  CHECK(weights[15] == 1);
}

TEST_CASE("preparata parameter check") {
  NRCode code = nordstrom_robinson();
  CHECK(verify_preparata_parameters(code.words, 15));

  std::vector<Word> wrong_size(code.words.begin(), code.words.begin() + 128);
  CHECK_FALSE(verify_preparata_parameters(wrong_size, 15));

  // right size, distance broken
  std::vector<Word> close = code.words;
  close[1] = code.words[2] + Word::unit(15, 1);
  CHECK_FALSE(verify_preparata_parameters(close, 15));

  CHECK_THROWS_AS(verify_preparata_parameters(code.words, 14), std::invalid_argument);
}

TEST_CASE("enclosing code is a perfect linear code containing the NR code") {
  NRCode code = nordstrom_robinson();
  LinearCode enclosing = enclosing_hamming(code);
  CHECK(enclosing.length() == 15);
  CHECK(enclosing.dimension() == 11);
  CHECK(enclosing.min_distance() == 3);
  for (const Word& w : code.words) CHECK(enclosing.contains(w));
  CHECK(verify_perfect(oracle_from_linear(enclosing)).is_perfect);

  // parity-check columns are the 15 distinct nonzero 4-bit values
  const BitMatrix& h = enclosing.parity_check();
  CHECK(h.rows() == 4);
  std::set<std::uint64_t> cols;
  for (int j = 1; j <= 15; ++j) cols.insert(h.column_value(j));
  CHECK(cols.size() == 15);
  CHECK(cols.count(0) == 0);
}

TEST_CASE("column matching transports codes between presentations") {
  BitMatrix from = canonical_hamming_check_matrix(15).rref();
  BitMatrix to = enclosing_hamming(nordstrom_robinson()).parity_check().rref();
  std::vector<int> perm = match_parity_columns(from, to);
  CHECK(perm.size() == 15);
  std::set<int> targets(perm.begin(), perm.end());
  CHECK(targets.size() == 15);  // a permutation

  // transport preserves membership
  LinearCode target = enclosing_hamming(nordstrom_robinson());
  for (const Word& w : canonical_hamming(15).enumerate())
    CHECK(target.contains(permute_coordinates(w, perm)));

  CHECK_THROWS_AS(match_parity_columns(from, canonical_hamming_check_matrix(7).rref()),
                  std::invalid_argument);
}

TEST_CASE("permute_coordinates moves bits where the permutation says") {
  std::vector<int> perm = {3, 1, 2};
  Word w = Word::from_string("110");
  // coordinate 1 -> position 3, coordinate 2 -> position 1
  CHECK(permute_coordinates(w, perm).to_string() == "101");
  CHECK_THROWS_AS(permute_coordinates(Word::zero(4), perm), std::invalid_argument);
}

TEST_CASE("transported components partition the enclosing code") {
  LinearCode enclosing = enclosing_hamming(nordstrom_robinson());
  std::vector<TransportedComponent> components = transported_components(enclosing);
  CHECK(components.size() == 16);
  std::vector<Word> all;
  for (const TransportedComponent& tc : components) {
    CHECK(tc.words.size() == 128);
    for (const Word& w : tc.words) CHECK(enclosing.contains(w));
    all.insert(all.end(), tc.words.begin(), tc.words.end());
  }
  std::sort(all.begin(), all.end());
  CHECK(all.size() == 2048);
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("every component trace is a 16-word perfect set in the distance-3 graph") {
  NRCode code = nordstrom_robinson();
  LinearCode enclosing = enclosing_hamming(code);
  int total = 0;
  std::vector<Word> trace_union;
  for (const TransportedComponent& tc : transported_components(enclosing)) {
    TraceReport report = component_trace_check(code, tc.words);
    CHECK(report.trace_size == 16);
    CHECK(report.is_perfect_in_graph);
    REQUIRE(report.degree_histogram.size() == 1);
    CHECK(report.degree_histogram.begin()->first == 7);    // distance-3 graph on a component is 7-regular
    CHECK(report.degree_histogram.begin()->second == 128);
    total += report.trace_size;

    for (const Word& w : tc.words)
      if (std::binary_search(code.words.begin(), code.words.end(), w)) trace_union.push_back(w);
  }
  // the traces partition the whole NR code
  CHECK(total == 256);
  std::sort(trace_union.begin(), trace_union.end());
  CHECK(trace_union == code.words);
}

TEST_CASE("a random 128-word subset fails the trace check") {
  NRCode code = nordstrom_robinson();
  LinearCode enclosing = enclosing_hamming(code);
  std::vector<Word> words = oracle_from_linear(enclosing).enumerate();
  std::mt19937_64 rng(99);
  std::shuffle(words.begin(), words.end(), rng);
  words.resize(128);
  std::sort(words.begin(), words.end());
  TraceReport report = component_trace_check(code, words);
  CHECK_FALSE(report.is_perfect_in_graph);
}

TEST_CASE("partition condition holds for cosets of NR inside the enclosing code") {
  NRCode nr = nordstrom_robinson();
  LinearCode enclosing = enclosing_hamming(nr);
  CodeOracle code = oracle_from_linear(enclosing);
  CodeOracle sub = oracle_from_words(15, nr.words);
  std::vector<Word> all = code.enumerate();
  std::mt19937_64 rng(5);
  int outside_checked = 0;
  while (outside_checked < 25) {
    const Word& alpha = all[rng() % all.size()];
    if (sub.contains(alpha)) continue;
    ++outside_checked;
    PartitionConditionReport r = preparata_partition_condition(code, nr.words, alpha);
    CHECK(r.holds);
    CHECK(r.triples.triples.size() == 5);
  }
}
