#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "perfcodes/gf2.hpp"
#include "perfcodes/oracle.hpp"
#include "perfcodes/word.hpp"

namespace perfcodes {

/// Length-8 word over Z4.
struct QuaternaryWord {
  std::array<std::uint8_t, 8> symbols{};

  QuaternaryWord operator+(const QuaternaryWord& rhs) const {
    QuaternaryWord out;
    for (std::size_t i = 0; i < 8; ++i) out.symbols[i] = static_cast<std::uint8_t>((symbols[i] + rhs.symbols[i]) & 3);
    return out;
  }
  bool operator==(const QuaternaryWord&) const = default;
  bool operator<(const QuaternaryWord& rhs) const { return symbols < rhs.symbols; }
};

/// The 256 Z4-linear combinations of the pinned octacode generator rows: the
/// cyclic length-7 code generated by 3 + x + 2x^2 + x^3, extended by a parity
/// symbol that makes every row sum to 0 mod 4.
std::vector<QuaternaryWord> octacode_words();

/// Per-symbol map 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10, concatenated; length 16.
Word gray_map(const QuaternaryWord& q);

struct NRCode {
  std::vector<Word> words;      // 256 words of length 15, sorted
  bool origin_included = false;
};

/// Nordstrom-Robinson code: Gray image of the octacode punctured at
/// coordinate 16, translated so the zero word is a member. Construction
/// aborts unless the result is a (15, 256, 5) code whose parity extension has
/// minimum distance 6.
NRCode nordstrom_robinson();

/// |code| = 2^(n+1)/(n+1)^2 and minimum pairwise distance >= 5.
bool verify_preparata_parameters(const std::vector<Word>& words, int n);

/// The linear span of the code words, presented by four independent dual
/// vectors. Aborts unless the parity-check columns are 15 distinct nonzero
/// 4-bit vectors and the code is contained in the result.
LinearCode enclosing_hamming(const NRCode& code);

/// perm[j-1] = position in `to` of the column of `from` at position j.
/// Requires equal row counts and distinct nonzero columns on both sides.
std::vector<int> match_parity_columns(const BitMatrix& from, const BitMatrix& to);

Word permute_coordinates(const Word& w, const std::vector<int>& perm);

struct TransportedComponent {
  Word beta;                 // component label in the canonical coordinates
  std::vector<Word> words;   // component moved into the enclosing coordinates
};

/// The 16 linear components of the canonical H_15, carried into the
/// coordinates of the enclosing code by matching parity-check columns.
std::vector<TransportedComponent> transported_components(const LinearCode& enclosing);

struct TraceReport {
  bool is_perfect_in_graph = false;  // balls around the trace partition the component
  int trace_size = 0;
  std::map<int, int> degree_histogram;  // distance-3 graph degrees within the component
};

/// Intersects the code with a component and checks perfectness in the graph
/// whose edges join component words at Hamming distance 3.
TraceReport component_trace_check(const NRCode& code, const std::vector<Word>& component);

}  // namespace perfcodes
