#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "doctest.h"
#include "perfcodes/word.hpp"

using perfcodes::Word;
using perfcodes::concat;
using perfcodes::distance;

TEST_CASE("word construction and accessors") {
  Word w = Word::from_string("1011000");
  CHECK(w.length() == 7);
  CHECK(w.weight() == 3);
  CHECK(w.bit(1));
  CHECK_FALSE(w.bit(2));
  CHECK(w.bit(3));
  CHECK(w.bit(4));
  CHECK(w.to_string() == "1011000");
  CHECK(w.support() == std::vector<int>{1, 3, 4});

  CHECK(Word::zero(5).to_string() == "00000");
  CHECK(Word::ones(5).to_string() == "11111");
  CHECK(Word::unit(5, 2).to_string() == "01000");
  CHECK(Word().length() == 0);  // empty word is allowed
  CHECK(Word().to_string().empty());
}

TEST_CASE("word validation") {
  CHECK_THROWS_AS(Word(64, 0), std::invalid_argument);
  CHECK_THROWS_AS(Word(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Word(3, 0b1000), std::invalid_argument);  // bit outside the length
  CHECK_THROWS_AS(Word::from_string("10a"), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_string("10").bit(3), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_string("10").bit(0), std::invalid_argument);
  CHECK_NOTHROW(Word(63, ~0ull >> 1));
}

TEST_CASE("xor requires equal lengths and satisfies group laws") {
  Word a = Word::from_string("1100");
  Word b = Word::from_string("1010");
  CHECK((a + b).to_string() == "0110");
  CHECK((a + a) == Word::zero(4));
  CHECK((a + Word::zero(4)) == a);
  CHECK(((a + b) + b) == a);
  CHECK_THROWS_AS(a + Word::from_string("10100"), std::invalid_argument);
}

TEST_CASE("distance is a metric") {
  std::vector<Word> words;
  for (std::uint64_t v = 0; v < 32; ++v) words.push_back(Word(5, v));
  for (const Word& a : words)
    for (const Word& b : words) {
      CHECK(distance(a, b) == distance(b, a));
      CHECK((distance(a, b) == 0) == (a == b));
      for (const Word& c : words) CHECK(distance(a, c) <= distance(a, b) + distance(b, c));
    }
  CHECK(distance(Word::zero(7), Word::ones(7)) == 7);
}

TEST_CASE("ordering matches textual lexicographic order") {
  std::vector<Word> words;
  for (std::uint64_t v = 0; v < 64; ++v) words.push_back(Word(6, v));
  std::sort(words.begin(), words.end());
  for (std::size_t i = 1; i < words.size(); ++i)
    CHECK(words[i - 1].to_string() < words[i].to_string());

  // shorter words sort first regardless of content
  CHECK(Word::ones(3) < Word::zero(4));
  CHECK_FALSE(Word::zero(4) < Word::ones(3));

  // strict weak ordering on a mixed-length set
  std::set<Word> mixed;
  for (int len = 0; len <= 4; ++len)
    for (std::uint64_t v = 0; v < (1ull << len); ++v) mixed.insert(Word(len, v));
  CHECK(mixed.size() == 1 + 2 + 4 + 8 + 16);
}

TEST_CASE("slice and concat invert each other") {
  Word w = Word::from_string("110100101");
  CHECK(w.slice(1, 4).to_string() == "1101");
  CHECK(w.slice(5, 5).to_string() == "00101");
  CHECK(concat(w.slice(1, 4), w.slice(5, 5)) == w);
  CHECK(concat(Word(), w) == w);
  CHECK_THROWS_AS(w.slice(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(w.slice(8, 3), std::invalid_argument);
  CHECK_THROWS_AS(concat(Word::zero(32), Word::zero(32)), std::invalid_argument);
}

TEST_CASE("parity and weight agree") {
  for (std::uint64_t v = 0; v < 256; ++v) {
    Word w(8, v);
    CHECK(w.parity() == w.weight() % 2);
  }
}

TEST_CASE("words hash into unordered containers") {
  std::unordered_set<perfcodes::Word> seen;
  for (std::uint64_t v = 0; v < 128; ++v) seen.insert(Word(7, v));
  CHECK(seen.size() == 128);
  CHECK(seen.count(Word::from_string("1010101")) == 1);
}
